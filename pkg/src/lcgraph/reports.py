"""Uniform pass/fail reporting for theorem checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class CheckItem:
    name: str
    passed: Optional[bool]    # None marks a check that does not apply
    detail: str = ""

    def render(self) -> str:
        status = "SKIP" if self.passed is None else ("PASS" if self.passed else "FAIL")
        text = f"check {self.name}: {status}"
        if self.detail:
            text += f"  [{self.detail}]"
        return text


@dataclass
class Report:
    title: str
    items: List[CheckItem] = field(default_factory=list)

    def add(self, name: str, passed: Optional[bool], detail: str = "") -> CheckItem:
        item = CheckItem(name, passed, detail)
        self.items.append(item)
        return item

    @property
    def passed(self) -> bool:
        return all(item.passed is not False for item in self.items)

    @property
    def failures(self) -> List[CheckItem]:
        return [item for item in self.items if item.passed is False]

    def render(self) -> str:
        lines = [f"== {self.title} =="]
        lines.extend(item.render() for item in self.items)
        verdict = "all checks passed" if self.passed else \
            f"{len(self.failures)} check(s) FAILED"
        lines.append(f"-- {verdict}")
        return "\n".join(lines)
