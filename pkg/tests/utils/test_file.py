import os
import tempfile
import uuid

import pytest

from logiparam.exceptions import LogiParamError
from logiparam.utils.file import (
    create_dir,
    is_dir,
    is_file,
    load_json,
    read_file,
    remove_file,
    resolve_path,
    walk_tree,
    write_file,
)


@pytest.mark.utility
def test_checking_directory():
    dirname = str(uuid.uuid4())
    assert not is_dir(dirname)


@pytest.mark.utility
def test_checking_file():
    file_name = str(uuid.uuid4())
    assert not is_file(file_name)


@pytest.mark.utility
def test_resolve_path():
    assert resolve_path("$HOME") == os.path.realpath(os.path.expanduser("~"))
    assert not resolve_path(str(uuid.uuid4()))
    assert resolve_path(str(uuid.uuid4()), exist=False)


@pytest.mark.utility
def test_write_read_remove():
    with tempfile.TemporaryDirectory() as tmpdir:
        path = os.path.join(tmpdir, "nested", "case.json")
        write_file(path, '{"id": "é"}')
        assert is_file(path)
        assert read_file(path) == '{"id": "é"}'
        assert load_json(path) == {"id": "é"}

        remove_file(path)
        assert not is_file(path)
        # removing a missing file is a no-op
        remove_file(path)

        with pytest.raises(LogiParamError):
            read_file(path)


@pytest.mark.utility
def test_load_json_rejects_malformed_content():
    with tempfile.TemporaryDirectory() as tmpdir:
        path = os.path.join(tmpdir, "broken.json")
        write_file(path, "{")
        with pytest.raises(LogiParamError):
            load_json(path)


@pytest.mark.utility
def test_walk_tree():
    with tempfile.TemporaryDirectory() as tmpdir:
        for name in ("b.json", "a.json", "notes.txt", os.path.join("sub", "c.json")):
            write_file(os.path.join(tmpdir, name), "[]")

        found = walk_tree(tmpdir, ".json")
        assert [os.path.basename(f) for f in found] == ["a.json", "b.json", "c.json"]
        assert len(walk_tree(tmpdir, [".json", ".txt"], max_depth=1)) == 3
        assert walk_tree(os.path.join(tmpdir, "missing")) == []

        create_dir(os.path.join(tmpdir, "made"))
        assert is_dir(os.path.join(tmpdir, "made"))
