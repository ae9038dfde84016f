"""pytest collection wiring for the package's own doctest runner
(``python -m ncdirac.test``); one pytest item per doctested file."""
import pytest

import ncdirac.test


@pytest.mark.parametrize('file_', ncdirac.test.files_for_doctest)
def test_doctest_file(file_):
    assert ncdirac.test.doctest_files([file_], verbose=-1) == 0
