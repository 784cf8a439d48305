"""Shared fixtures: the standard wavepacket and prebuilt oracle circuits."""

import csv

import pytest

from rindler_teleport import (
    build_displaced_circuit,
    build_squeezed_circuit,
    make_wavepacket,
)


def read_report_csv(path):
    """Split a CSV report into (metadata dict, header list, rows)."""
    meta = {}
    body = []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            meta[key.strip()] = value.strip()
        else:
            body.append(line)
    parsed = list(csv.reader(body))
    return meta, parsed[0], parsed[1:]

STANDARD_OMEGA0 = 1.0
STANDARD_SIGMA = 0.05
STANDARD_A = 1.0
STANDARD_RS = 0.4
STANDARD_BINS = 256


@pytest.fixture(scope="session")
def wp_standard():
    return make_wavepacket(STANDARD_OMEGA0, STANDARD_SIGMA)


@pytest.fixture(scope="session")
def circ_displaced(wp_standard):
    return build_displaced_circuit(STANDARD_A, wp_standard, STANDARD_BINS)


@pytest.fixture(scope="session")
def circ_squeezed(wp_standard):
    return build_squeezed_circuit(STANDARD_A, wp_standard, STANDARD_BINS, r_s=STANDARD_RS)
