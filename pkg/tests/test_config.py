import logging

import pytest

from dyckgen import utils
from dyckgen.config import Guards, load_guards
from dyckgen.constants import (
    DEFAULT_DIRECT_DET_MAX_HEIGHT,
    DEFAULT_ENUM_PARTITION_BUDGET,
    DEFAULT_ORACLE_MAX_LEN,
    GUARD_ENV_VAR,
    LOGDIR_ENV_VAR,
)
from dyckgen.errors import DyckgenError, GuardExceeded
from dyckgen.utils import build_logger


def test_default_guards():
    guards = load_guards({})
    assert guards == Guards()
    assert guards.direct_det_max_height == DEFAULT_DIRECT_DET_MAX_HEIGHT == 32
    assert guards.enum_partition_budget == DEFAULT_ENUM_PARTITION_BUDGET == 36
    assert guards.oracle_max_len == DEFAULT_ORACLE_MAX_LEN == 24
    assert not guards.lifted


@pytest.mark.parametrize("value,lifted", [("1", True), ("TRUE", True), (" yes ", True), ("on", True), ("0", False), ("", False)])
def test_guard_override(value, lifted):
    assert load_guards({GUARD_ENV_VAR: value}).lifted is lifted


def test_enforce(caplog):
    Guards().enforce("k", 5, 5, GuardExceeded)
    with pytest.raises(GuardExceeded, match="Set DYCKGEN_GUARD_OVERRIDE=1"):
        Guards().enforce("k", 6, 5, GuardExceeded)
    with caplog.at_level(logging.WARNING):
        Guards(lifted=True).enforce("k", 6, 5, GuardExceeded)
    assert "k=6 exceeds the desk-scale guard 5" in caplog.text


def test_errors_are_value_errors():
    assert issubclass(GuardExceeded, DyckgenError)
    assert issubclass(DyckgenError, ValueError)


def test_build_logger_levels():
    logger = build_logger("dyckgen.test", level=logging.DEBUG)
    assert logger.name == "dyckgen.test"
    assert logger.level == logging.DEBUG
    assert build_logger("dyckgen.test", level=logging.WARNING).level == logging.WARNING


def test_log_file_gets_each_child_record_once(tmp_path, monkeypatch):
    monkeypatch.setenv(LOGDIR_ENV_VAR, str(tmp_path))
    monkeypatch.setattr(utils, "handler", None)
    logger = build_logger("dyckgen", "dyckgen.log")
    try:
        logging.getLogger("dyckgen.verify").info("Running 2 verification tasks")
        utils.handler.flush()
        assert (tmp_path / "dyckgen.log").read_text().count("Running 2 verification tasks") == 1
        assert utils.handler not in logging.getLogger("dyckgen.verify").handlers
    finally:
        logger.removeHandler(utils.handler)
        utils.handler.close()
        logger.setLevel(logging.NOTSET)
