import os

OUTPUT_FORMATS = ("text", "json", "latex")


class Settings:
    @staticmethod
    def _get_int(name: str, default: int) -> int:
        return int(os.getenv(name, str(default)))

    @staticmethod
    def _get_bool(name: str, default: bool) -> bool:
        raw = os.getenv(name)
        if raw is None:
            return default
        return raw.strip().lower() in {"1", "true", "yes", "on"}

    @property
    def POTENTIAL_FORMAT(self) -> str:
        return os.getenv("POTENTIAL_FORMAT", "text").strip().lower()

    @property
    def LOG_LEVEL(self) -> str:
        return os.getenv("LOG_LEVEL", "WARNING").strip().upper()

    @property
    def VERIFY_TRIALS(self) -> int:
        return self._get_int("VERIFY_TRIALS", 200)

    @property
    def VERIFY_MAX_STRANDS(self) -> int:
        return self._get_int("VERIFY_MAX_STRANDS", 6)

    @property
    def VERIFY_MAX_LENGTH(self) -> int:
        return self._get_int("VERIFY_MAX_LENGTH", 12)

    @property
    def VERIFY_MAX_COLORS(self) -> int:
        return self._get_int("VERIFY_MAX_COLORS", 4)

    @property
    def VERIFY_SEED(self) -> int:
        return self._get_int("VERIFY_SEED", 0)

    @property
    def BATCH_WORKERS(self) -> int:
        return self._get_int("BATCH_WORKERS", 4)

    @property
    def GASSNER_DEBUG_CHECKS(self) -> bool:
        return self._get_bool("GASSNER_DEBUG_CHECKS", False)

    @property
    def API_MAX_STRANDS(self) -> int:
        return self._get_int("API_MAX_STRANDS", 12)

    @property
    def API_MAX_WORD_LENGTH(self) -> int:
        return self._get_int("API_MAX_WORD_LENGTH", 200)

    @property
    def API_MAX_TRIALS(self) -> int:
        return self._get_int("API_MAX_TRIALS", 500)

    @property
    def CORS_ORIGINS(self) -> str:
        return os.getenv("CORS_ORIGINS", "http://localhost:3000")


settings = Settings()
