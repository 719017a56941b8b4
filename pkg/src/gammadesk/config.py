from __future__ import annotations

import os
from dataclasses import asdict, dataclass

PROFILES = {
    "fast": {"max_n_table": 200, "max_n_enum": 7, "series_order": 10},
    "full": {"max_n_table": 1000, "max_n_enum": 9, "series_order": 14},
}
PROFILE_ENV = "GAMMA_DESK_PROFILE"


@dataclass(frozen=True)
class RunConfig:
    profile: str = "fast"
    max_n_table: int = 200
    max_n_enum: int = 7
    series_order: int = 10
    out_dir: str = "gammadesk-out"
    resume_from: str | None = None

    @classmethod
    def from_profile(cls, profile: str | None = None, **overrides) -> "RunConfig":
        if profile is None:
            profile = os.environ.get(PROFILE_ENV, "fast")
        overrides = {k: v for k, v in overrides.items() if v is not None}
        if profile == "custom":
            base = dict(PROFILES["fast"])
        elif profile in PROFILES:
            base = dict(PROFILES[profile])
        else:
            raise ValueError(f"unknown profile {profile!r}")
        numeric = {k for k in overrides if k in base}
        if numeric and profile != "custom":
            profile = "custom"
        base.update(overrides)
        return cls(profile=profile, **base)

    def as_dict(self) -> dict:
        return asdict(self)
