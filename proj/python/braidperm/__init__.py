"""Braid-like permutation representations of the Artin braid group."""

from ._braidperm import (
    BraidImage,
    InvalidSpec,
    ParseError,
    Permutation,
    build_pair,
    build_sigma,
    conjugate,
    construct,
    count_commuting_pairs_symmetric,
    enumerate_M,
    enumerate_N,
    is_braid_like,
    omega_shift,
    partition_count,
    square_root_tau,
    theta,
    verify,
)

__all__ = [
    "BraidImage",
    "InvalidSpec",
    "ParseError",
    "Permutation",
    "build_pair",
    "build_sigma",
    "conjugate",
    "construct",
    "count_commuting_pairs_symmetric",
    "enumerate_M",
    "enumerate_N",
    "is_braid_like",
    "omega_shift",
    "partition_count",
    "square_root_tau",
    "theta",
    "verify",
]
