"""
conftest.py - Common fixtures and utilities for steaneChef tests

This file contains:
1. Registry codes and a reference Steane preparation circuit
2. A Click runner and a temporary data directory
3. Marker registration and logging setup for pytest
"""

import logging
import os
import shutil
import tempfile

import pytest
from click.testing import CliRunner

from steaneChef.config.config import Config
from steaneChef.core.circuit import PrepCircuit
from steaneChef.core.codes import registry_lookup

# Hamming-check encoder of the Steane code, plus qubits 0, 1 and 3.
STEANE_GATES = [(0, 2), (0, 4), (0, 6), (1, 2), (1, 5), (1, 6), (3, 4), (3, 5), (3, 6)]
STEANE_PLUS = [0, 1, 3]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale runs (d=5 synthesis, exhaustive injection)")
    config.addinivalue_line("markers", "integration: crosses several subpackages")
    config.addinivalue_line("markers", "e2e: drives the CLI end to end")


@pytest.fixture(autouse=True)
def quiet_logging():
    """Silence log output during tests."""
    logging.disable(logging.CRITICAL)
    yield
    logging.disable(logging.NOTSET)


@pytest.fixture(autouse=True)
def fresh_config():
    """Undo any Config changes a test makes."""
    yield
    Config().initialize()


@pytest.fixture
def steane():
    return registry_lookup("steane")


@pytest.fixture
def cc17():
    return registry_lookup("cc_4_8_8_17")


@pytest.fixture
def cc19():
    return registry_lookup("cc_6_6_6_19")


@pytest.fixture
def steane_prep():
    """A valid, non fault-tolerant Steane |0>_L preparation."""
    return PrepCircuit.from_plus_qubits(7, STEANE_PLUS, STEANE_GATES)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def temp_data_dir():
    """Fixture to create a temporary data directory for tests."""
    data_dir = tempfile.mkdtemp()
    old_data_dir = os.environ.get("STEANECHEF_DATA_DIR")
    os.environ["STEANECHEF_DATA_DIR"] = data_dir

    yield data_dir

    shutil.rmtree(data_dir, ignore_errors=True)
    if old_data_dir:
        os.environ["STEANECHEF_DATA_DIR"] = old_data_dir
    else:
        del os.environ["STEANECHEF_DATA_DIR"]


@pytest.fixture
def steane_protocol(steane, steane_prep):
    """Four copies of the reference Steane preparation in the verification layout."""
    from steaneChef.core.protocol import build_protocol

    return build_protocol(steane_prep, steane_prep, steane_prep, steane_prep, steane)


@pytest.fixture
def steane_circuit_dir(tmp_path, steane_prep):
    """A directory holding four copies of the reference preparation as C1..C4.circ."""
    from steaneChef.core.circuit import serialize_circuit

    circuit_dir = tmp_path / "circuits"
    circuit_dir.mkdir()
    for index in range(1, 5):
        (circuit_dir / f"C{index}.circ").write_text(serialize_circuit(steane_prep), encoding="utf-8")
    return circuit_dir
