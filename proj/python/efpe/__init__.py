"""eFPE format-preserving encryption for even-length decimal strings."""

from ._efpe import (
    Cipher,
    DomainError,
    EntropyError,
    Error,
    FormatError,
    InvalidArgument,
    MalformedKey,
    MasterKey,
    ParseError,
    SubkeyPair,
    analysis,
    derive_round_keys,
    format_master_key,
    generate_master_key,
    is_valid_numeric,
    join_halves,
    parse_master_key,
    pow10,
    prf_core,
    prf_wide,
    rotate_left_one_byte,
    round_f,
    split_halves,
    sub_bytes,
    validate_numeric,
    vectors,
)

__all__ = [
    "Cipher",
    "DomainError",
    "EntropyError",
    "Error",
    "FormatError",
    "InvalidArgument",
    "MalformedKey",
    "MasterKey",
    "ParseError",
    "SubkeyPair",
    "analysis",
    "derive_round_keys",
    "format_master_key",
    "generate_master_key",
    "is_valid_numeric",
    "join_halves",
    "parse_master_key",
    "pow10",
    "prf_core",
    "prf_wide",
    "rotate_left_one_byte",
    "round_f",
    "split_halves",
    "sub_bytes",
    "validate_numeric",
    "vectors",
]
