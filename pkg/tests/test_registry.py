#!/usr/bin/env python3
# tests/test_registry.py
# -*- coding: utf-8 -*-
"""
Unit tests for the method registry.

Smoke tests that methods can be registered and looked up, and that the
built-in methods advertise the inputs they need.
"""

import pytest

from rtucker.algorithms import (
    MethodDefinition,
    MethodRegistry,
    TuckerConfig,
    get_method,
    get_registry,
    hosvd,
    list_methods,
)

BUILTIN = {
    "hosvd",
    "sthosvd",
    "r-hosvd",
    "r-sthosvd",
    "adaptive-r-hosvd",
    "adaptive-r-sthosvd",
    "sp-hosvd",
    "sp-sthosvd",
}


def test_registry_create():
    """Test creating a new registry."""
    registry = MethodRegistry()
    assert registry is not None
    assert len(registry.list_methods()) == 0


def test_registry_register_method():
    """Test registering a method."""
    registry = MethodRegistry()
    registry.register(MethodDefinition("mine", hosvd, "deterministic"))

    assert "mine" in registry.list_methods()
    retrieved = registry.get_method("mine")
    assert retrieved is not None
    assert retrieved.name == "mine"


def test_registry_unregister_method():
    """Test unregistering a method."""
    registry = MethodRegistry()
    registry.register(MethodDefinition("mine", hosvd, "deterministic"))

    assert registry.unregister("mine") is True
    assert "mine" not in registry.list_methods()
    assert registry.unregister("mine") is False


def test_registry_rejects_unnamed_method():
    """Test a method needs a name."""
    with pytest.raises(ValueError):
        MethodRegistry().register(MethodDefinition("", hosvd, "deterministic"))


def test_registry_get_nonexistent_method():
    """Test getting a method that doesn't exist."""
    assert MethodRegistry().get_method("nonexistent") is None
    assert get_method("nonexistent") is None


def test_builtin_methods():
    """All eight command-line methods are registered."""
    assert set(list_methods()) == BUILTIN
    assert set(get_registry().get_all_methods()) == BUILTIN


def test_method_capabilities():
    """Families and required inputs are advertised."""
    assert get_method("hosvd").randomized is False
    assert get_method("r-sthosvd").randomized is True
    assert get_method("r-sthosvd").sequential is True
    assert get_method("r-hosvd").sequential is False

    adaptive = get_method("adaptive-r-sthosvd")
    assert adaptive.needs_tolerance and not adaptive.needs_ranks

    sp = get_method("sp-sthosvd")
    assert sp.family == "structure-preserving"
    assert sp.orthonormal is False


def test_method_is_callable(dense_tensor):
    """Definitions run their implementation."""
    t = get_method("sthosvd")(dense_tensor, TuckerConfig(ranks=(2, 2, 2)))
    assert t.meta.method == "sthosvd"


def test_global_registry():
    """Test global registry singleton."""
    registry1 = get_registry()
    registry2 = get_registry()
    assert registry1 is registry2


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
