"""Shared catalog access for the test suite (cached: entries are immutable)."""

from functools import lru_cache

from fusionring import builtin, character_table, fp_character, is_commutative
from fusionring.catalog import all_builtin_names

ALL_NAMES = all_builtin_names()
COMMUTATIVE_NAMES = [n for n in ALL_NAMES if n != "vec_s3"]
MODULAR_NAMES = (["fibonacci", "ising"]
                 + [f"pointed_zn({n})" for n in range(1, 25)]
                 + [f"su2_k({k})" for k in range(1, 11)])
# a small cross-section used where a full sweep would only repeat itself
SAMPLE_NAMES = ["trivial", "fibonacci", "ising", "rep_s3", "rep_q8",
                "pointed_zn(5)", "pointed_zn(12)", "tambara_yamagami_zn(3)", "su2_k(4)"]


@lru_cache(maxsize=None)
def entry(name):
    return builtin(name)


def ring_of(name):
    return entry(name).ring


@lru_cache(maxsize=None)
def fp_of(name):
    return fp_character(ring_of(name))


@lru_cache(maxsize=None)
def table_of(name):
    return character_table(ring_of(name))


def commutative(name):
    return is_commutative(ring_of(name))
