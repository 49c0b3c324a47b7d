from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import BaseModel, Field, field_validator
from typing import Union


class Limits(BaseModel):
    # single enumerations
    enumerate_cap: int = Field(default=12, ge=12)
    # sweeps over every n up to max-n (verify, counts, fixed points)
    exhaustive_cap: int = Field(default=10, ge=1)


class Settings(BaseSettings):
    limits: Limits = Field(default_factory=Limits)
    log_level: str = "INFO"
    cors_origins: Union[str, list[str]] = "*"

    @field_validator("cors_origins", mode="after")
    @classmethod
    def parse_cors_origins(cls, v):
        # Convert to list if it's a string
        if isinstance(v, str):
            if "," in v:
                return [origin.strip() for origin in v.split(",")]
            return [v.strip()]
        return v

    model_config = SettingsConfigDict(
        env_prefix="SYMBOLS_",
        env_nested_delimiter="__",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


settings = Settings()
