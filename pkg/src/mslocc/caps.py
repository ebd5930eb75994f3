"""Resource caps, overridable through environment variables."""

import os

# Hard ceiling on dense state vectors (amplitude count).
DEFAULT_MAX_AMPLITUDES = 2**24
# Ceiling on tableau pairs visited by the LU enumeration.
DEFAULT_MAX_TABLEAU_PAIRS = 5_000_000
# Ceiling on tuple length for tensor powers (k-copy majorization).
DEFAULT_MAX_TUPLE_LEN = 2**16
# Factorial cap for the source-entanglement permutation sum.
DEFAULT_MAX_SOURCE_ENT_DIM = 9


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def max_amplitudes() -> int:
    return _env_int("MSLOCC_MAX_AMPLITUDES", DEFAULT_MAX_AMPLITUDES)


def max_tableau_pairs() -> int:
    return _env_int("MSLOCC_MAX_TABLEAU_PAIRS", DEFAULT_MAX_TABLEAU_PAIRS)


def max_tuple_len() -> int:
    return _env_int("MSLOCC_MAX_TUPLE_LEN", DEFAULT_MAX_TUPLE_LEN)


def max_source_ent_dim() -> int:
    return _env_int("MSLOCC_MAX_SOURCE_ENT_DIM", DEFAULT_MAX_SOURCE_ENT_DIM)
