import doctest
import importlib

import pytest

MODULES = ["qpoly", "contfrac", "qrat", "farey", "closures", "sequences", "jones", "verify", "cli"]


@pytest.mark.parametrize("name", ["qrational"] + [f"qrational.{m}" for m in MODULES])
def test_docstring_examples(name):
    module = importlib.import_module(name)
    result = doctest.testmod(module, optionflags=doctest.NORMALIZE_WHITESPACE)
    assert result.failed == 0
