import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from kgtool.demos import all_demos, demo  # noqa: E402


@pytest.fixture
def omega11():
    return demo("example42")


@pytest.fixture
def ex43():
    return demo("example43")


@pytest.fixture(params=sorted(all_demos()))
def any_demo(request):
    return all_demos()[request.param]
