"""Runtime settings, overridable through `HYPERBICYCLE_*` environment variables."""

from functools import lru_cache
from importlib.metadata import PackageNotFoundError, version

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_SEED = 20121203


class Settings(BaseSettings):
    """Defaults for the search and enumeration knobs."""

    model_config = SettingsConfigDict(env_prefix="HYPERBICYCLE_")

    workers: int = Field(default=1, ge=1, description="Worker processes for randomized search")
    seed: int = Field(default=DEFAULT_SEED, description="Seed for every randomized routine")
    enum_cap: int = Field(
        default=26, ge=0, description="Enumerate all 2^k codewords when k is at most this"
    )
    enum_budget: int = Field(
        default=2**20, ge=1, description="Maximum half-set size for meet-in-the-middle search"
    )
    rand_iters: int = Field(default=200, ge=0, description="Randomized search iterations")
    quick_time_budget: float = Field(
        default=60.0, gt=0, description="Seconds of distance work allowed per quick-tier entry"
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


def tool_version() -> str:
    """Installed package version, or a placeholder when running from a source tree."""
    try:
        return version("hyperbicycle-codes")
    except PackageNotFoundError:
        return "0.0.0+unknown"
