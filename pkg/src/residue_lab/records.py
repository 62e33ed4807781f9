"""Result records shared by the verification operations and the CLI."""

import json
from dataclasses import dataclass, field


@dataclass
class VerificationRecord:
    """Outcome of one named identity at one prime.

    `passed` must equal (expected == actual); `detail` carries informational
    values that are reported but not gated.  `elapsed` is kept in memory for
    the run manifest and never serialized, so output streams stay
    byte-identical across runs.
    """

    p: int
    claim: str
    expected: object
    actual: object
    passed: bool
    detail: dict | None = None
    elapsed: float = 0.0

    def to_obj(self) -> dict:
        obj = {
            "p": self.p,
            "claim": self.claim,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }
        if self.detail is not None:
            obj["detail"] = self.detail
        return obj

    def to_jsonl(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"), sort_keys=False)


@dataclass
class RunManifest:
    """Aggregate summary of one verification campaign."""

    command: str
    claim: str
    min_p: int
    max_p: int
    jobs: int
    started: str
    finished: str = ""
    total: int = 0
    passed: int = 0
    failed: int = 0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "claim": self.claim,
            "min_p": self.min_p,
            "max_p": self.max_p,
            "jobs": self.jobs,
            "started": self.started,
            "finished": self.finished,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
        }
        obj.update(self.extra)
        return json.dumps(obj, separators=(",", ":"), sort_keys=False)
