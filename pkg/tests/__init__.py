"""Test package initialization."""


def test_imports():
    """Test that main package imports work."""
    from rtucker import RuntimeConfig, __version__, config

    assert __version__ == "0.1.0"
    assert config is not None
    assert RuntimeConfig is not None


def test_utils_imports():
    """Test utility imports."""
    from rtucker.utils import ArchiveError, InvalidArgumentError, TuckerError, configure_logging

    assert issubclass(InvalidArgumentError, TuckerError)
    assert issubclass(ArchiveError, TuckerError)
    assert configure_logging is not None


def test_algorithm_imports():
    """Test algorithm imports."""
    from rtucker.algorithms import hosvd, r_sthosvd, sp_sthosvd

    assert hosvd is not None
    assert r_sthosvd is not None
    assert sp_sthosvd is not None
