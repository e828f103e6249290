# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import TYPE_CHECKING

from msgspec import Struct

if TYPE_CHECKING:
    from collections.abc import Iterable


class Violation(Struct, frozen=True, forbid_unknown_fields=True):
    code: str
    detail: str


class ValidationReport(Struct, frozen=True, forbid_unknown_fields=True):
    valid: bool
    violations: tuple[Violation, ...] = ()

    @classmethod
    def collect(cls, violations: Iterable[Violation]) -> ValidationReport:
        found = tuple(violations)
        return cls(valid=not found, violations=found)

    def codes(self) -> set[str]:
        return {violation.code for violation in self.violations}

    def merge(self, other: ValidationReport) -> ValidationReport:
        return ValidationReport.collect((*self.violations, *other.violations))
