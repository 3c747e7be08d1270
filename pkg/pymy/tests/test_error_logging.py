import os
import logging
import tempfile
import pymy.core.error_logging
import pymy.app.cli as cli


def test_log_file_created_and_closed(monkeypatch, tmp_path):
    monkeypatch.setattr(tempfile, "gettempdir", lambda: str(tmp_path))
    error_logging = pymy.core.error_logging.ErrorLogging("pymy-test")
    assert error_logging.setup_logging()
    assert error_logging.error_log_list == []
    logging.getLogger().debug("written to the log file")
    error_logging.close()
    assert os.path.isfile(error_logging.log_file_name)
    with open(error_logging.log_file_name) as file:
        assert "written to the log file" in file.read()


def test_old_logs_removed(monkeypatch, tmp_path):
    monkeypatch.setattr(tempfile, "gettempdir", lambda: str(tmp_path))
    error_logging = pymy.core.error_logging.ErrorLogging("pymy-test")
    os.makedirs(error_logging.app_log_dir)
    old_log = os.path.join(error_logging.app_log_dir, "old.txt")
    with open(old_log, "w") as file:
        file.write("old")
    ten_days_ago = os.stat(old_log).st_mtime - 10 * 24 * 60 * 60
    os.utime(old_log, (ten_days_ago, ten_days_ago))
    assert error_logging.setup_logging()
    error_logging.close()
    assert not os.path.exists(old_log)


def test_cli_logs_errors(monkeypatch, tmp_path):
    monkeypatch.setattr(tempfile, "gettempdir", lambda: str(tmp_path))
    assert cli.main(["eval", "-1"]) == 2
    log_dir = os.path.join(str(tmp_path), "pymy", "logs", "pymy")
    logs = os.listdir(log_dir)
    assert len(logs) == 1
    with open(os.path.join(log_dir, logs[0])) as file:
        assert "(ERROR)" in file.read()
