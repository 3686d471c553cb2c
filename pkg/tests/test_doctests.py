import doctest

import affschur.core
import affschur.weyl


def test_core_doctests():
    failures, _ = doctest.testmod(affschur.core)
    assert failures == 0


def test_weyl_doctests():
    failures, _ = doctest.testmod(affschur.weyl)
    assert failures == 0
