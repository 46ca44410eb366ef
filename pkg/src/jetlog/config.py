"""Application configuration via environment variables and YAML.

All runtime settings are prefixed with JETLOG_ and can be overridden via
environment variables (e.g. JETLOG_BUDGET=100000000).

Policy config (filtration cutoff, default theta, contact-vector shift, default
primes) is loaded from a YAML file with environment override support.
Priority: environment variables > YAML file > code defaults.
"""

import os
from pathlib import Path
from typing import Literal

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings

load_dotenv()

ENV_PREFIX = "JETLOG_POLICY_"


class RingConfig(BaseModel):
    # Terms of dimension <= cutoff are dropped from truncated series
    cutoff: int = -64


class JetsConfig(BaseModel):
    theta: int = Field(default=2, ge=1)


class ResolutionConfig(BaseModel):
    # 1: sum y_i m_i = n + 1 (domain of S(e, n)); 0: sum y_i m_i = n
    m_shift: int = Field(default=1, ge=0, le=1)


class CountingConfig(BaseModel):
    default_primes: list[int] = [5, 7, 11, 13]


class PolicyConfig(BaseModel):
    ring: RingConfig = RingConfig()
    jets: JetsConfig = JetsConfig()
    resolution: ResolutionConfig = ResolutionConfig()
    counting: CountingConfig = CountingConfig()


def _apply_env_overrides(data: dict) -> dict:
    """Override flat YAML values with JETLOG_POLICY_<SECTION>_<KEY> env vars."""
    for section_name, section in data.items():
        if not isinstance(section, dict):
            continue
        for key in section:
            env_key = f"{ENV_PREFIX}{section_name.upper()}_{key.upper()}"
            env_val = os.environ.get(env_key)
            if env_val is not None:
                existing = section[key]
                if isinstance(existing, bool):
                    section[key] = env_val.lower() in ("1", "true", "yes")
                elif isinstance(existing, int):
                    section[key] = int(env_val)
                elif isinstance(existing, list):
                    section[key] = [int(v) for v in env_val.split(",") if v.strip()]
                else:
                    section[key] = env_val
    return data


def load_policy_config(config_path: str = "config/jetlog.yaml") -> PolicyConfig:
    """Load policy config from YAML, apply env overrides, fall back to defaults."""
    path = Path(config_path)
    data: dict = {}

    if path.exists():
        raw = path.read_text(encoding="utf-8")
        data = yaml.safe_load(raw) or {}

    data = _apply_env_overrides(data)
    return PolicyConfig.model_validate(data)


class Settings(BaseSettings):
    """jetlog configuration. All fields map to JETLOG_<FIELD_NAME> env vars."""

    model_config = {"env_prefix": "JETLOG_"}

    budget: int = Field(default=10**9, ge=1)
    workers: int = Field(default=1, ge=1)
    log_level: str = "INFO"
    fixtures_dir: str = "fixtures"
    policy_config_path: str = "config/jetlog.yaml"
    output_format: Literal["json", "text"] = "json"


settings = Settings()
policy_config = load_policy_config(settings.policy_config_path)

if __name__ == "__main__":
    print(settings)
    print(policy_config.model_dump())
