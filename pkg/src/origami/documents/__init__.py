# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from origami.documents.codec import Document, dumps, from_document, kind_of, load, loads, to_document
from origami.documents.schema import FORMAT

__all__ = [
    "FORMAT",
    "Document",
    "dumps",
    "from_document",
    "kind_of",
    "load",
    "loads",
    "to_document",
]
