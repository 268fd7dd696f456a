"""
CONFIG - Configurações do Projeto
Carrega variáveis do .env (python-dotenv) e expõe os limites/flags usados
pelos oráculos, pelo solver e pelo harness de experimentos
"""

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict

load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "sim", "on"}


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value not in (None, "") else default


class Settings(BaseModel):
    """Configurações imutáveis lidas do ambiente"""

    model_config = ConfigDict(frozen=True)

    minrank_max_free: int = 24
    partition_max_n: int = 15
    clique_max_n: int = 20
    payload_draws: int = 3
    continue_after_fallback: bool = False
    decode_fixpoint: bool = False
    log_dir: str = "./logs"
    experiment_workers: int = 1

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Monta as configurações a partir das variáveis UCIC_*

        Returns:
            Settings com os valores do ambiente ou os defaults
        """
        return cls(
            minrank_max_free=_env_int("UCIC_MINRANK_MAX_FREE", 24),
            partition_max_n=_env_int("UCIC_PARTITION_MAX_N", 15),
            clique_max_n=_env_int("UCIC_CLIQUE_MAX_N", 20),
            payload_draws=_env_int("UCIC_PAYLOAD_DRAWS", 3),
            continue_after_fallback=_env_bool("UCIC_CONTINUE_AFTER_FALLBACK", False),
            decode_fixpoint=_env_bool("UCIC_DECODE_FIXPOINT", False),
            log_dir=os.getenv("UCIC_LOG_DIR", "./logs"),
            experiment_workers=_env_int("UCIC_EXPERIMENT_WORKERS", 1),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Retorna as configurações globais (lidas uma única vez)"""
    return Settings.from_env()
