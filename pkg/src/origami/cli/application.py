# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING, Any, NoReturn

from origami.cli.terminal import Terminal

if TYPE_CHECKING:
    from collections.abc import Callable

    from origami.config.model import RootConfig
    from origami.documents import Document
    from origami.documents.schema import DocumentKind
    from origami.errors import OrigamiError


class Application(Terminal):
    def __init__(self, *, terminator: Callable[[int], NoReturn], config: RootConfig, **kwargs: Any) -> None:
        super().__init__(config=config.terminal, **kwargs)

        self.__terminator = terminator
        self.__config = config

    @property
    def config(self) -> RootConfig:
        return self.__config

    def abort(self, text: str = "", code: int = 1) -> NoReturn:
        if text:
            self.display_critical(text)

        self.__terminator(code)

    def abort_error(self, error: OrigamiError) -> NoReturn:
        """
        Exit with code 2 for unreadable or malformed documents and 1 for every other domain error.
        """
        from origami.errors import DocumentError

        self.abort(f"{type(error).__name__}: {error}", code=2 if isinstance(error, DocumentError) else 1)

    def load(self, path: str, *, kind: DocumentKind | None = None) -> Document:
        from origami.documents import load

        document = load(path, kind=kind)
        self.display_debug(f"Loaded {type(document).__name__} from {path}")
        return document

    def emit(self, payload: Any, *, out: str | None = None) -> None:
        """
        Write a document (or an SVG string) to `out`, or to standard output when no path is given.
        """
        from origami.documents import dumps

        data = payload.encode("utf-8") if isinstance(payload, str) else dumps(payload)
        if out is None:
            self.write_payload(data)
            return

        from origami.utils.fs import Path

        Path(out).expand().write_atomic(data)
        self.display_success(f"Wrote {out}")
