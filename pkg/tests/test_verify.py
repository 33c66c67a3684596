"""The verification suites must pass wholesale; individual identities get
their own focused tests elsewhere, so modest bounds suffice here."""

from patstat import verify


def test_paper_suite_passes():
    # nmax=9 pushes every bounded check to its full documented range
    results = verify.run_paper_suite(nmax=9)
    failed = [r.line() for r in results if not r.passed]
    assert not failed, failed
    assert len(results) == len(verify.PAPER_CHECKS)
    assert all(r.cases > 0 for r in results)


def test_conjecture_suite_passes():
    results = verify.run_conjecture_suite(nmax=7)
    failed = [r.line() for r in results if not r.passed]
    assert not failed, failed
    assert len(results) == 5


def test_check_result_lines():
    results = verify.run_conjecture_suite(nmax=5)
    for r in results:
        line = r.line()
        assert line.startswith(("PASS", "FAIL"))
        assert r.name in line
