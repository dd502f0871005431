"""
This module provides helpers for reading problem files, formula files and
writing reports, traces and logs. Every helper resolves shell (``$HOME``) and
user (``~``) expansion first.
"""

import json
import os

from logiparam.exceptions import LogiParamError


def is_file(fname: str) -> bool:
    """Return True if ``fname`` resolves to an existing file, otherwise False.

    >>> is_file("$HOME/.bashrc")
    """
    if not isinstance(fname, str):
        return False

    fname = resolve_path(fname)
    return bool(fname) and os.path.isfile(fname)


def is_dir(dirname: str) -> bool:
    """Return True if ``dirname`` resolves to an existing directory, otherwise False."""
    if not isinstance(dirname, str):
        return False

    dirname = resolve_path(dirname)
    return bool(dirname) and os.path.isdir(dirname)


def walk_tree(root_dir, ext=None, max_depth=None):
    """Traverse ``root_dir`` and return a sorted list of files, optionally filtered by
    extension. The result is sorted so dataset loading is deterministic.

    Args:
        root_dir (str): directory path to traverse
        ext (str or list, optional): File extension or list of file extensions to keep
        max_depth (int, optional): Maximum depth to traverse

    Returns:
        list: absolute paths of matching files, empty when ``root_dir`` is not a directory
    """

    files_list = []
    if not is_dir(root_dir):
        return files_list

    if isinstance(ext, str):
        ext = [ext]

    resolved_dirpath = resolve_path(root_dir)

    for root, dirs, files in os.walk(resolved_dirpath):
        dirs.sort()
        if (
            max_depth is not None
            and root.count(os.sep) - resolved_dirpath.count(os.sep) >= max_depth
        ):
            del dirs[:]
            continue

        for file in files:
            if ext is None or os.path.splitext(file)[1] in ext:
                files_list.append(os.path.abspath(os.path.join(root, file)))

    return sorted(files_list)


def create_dir(dirname: str) -> None:
    """Create a directory if it doesn't exist.

    Raises:
        LogiParamError: if directory cannot be created
    """

    if not dirname:
        return

    dirname = resolve_path(dirname, exist=False)
    if os.path.isdir(dirname):
        return

    try:
        os.makedirs(dirname, exist_ok=True)
    except OSError as err:
        raise LogiParamError(f"Cannot create directory {dirname}", err)


def resolve_path(path: str, exist: bool = True) -> str:
    """Resolve a path with shell and user expansion and symlinks.

    Args:
        path (str): file path to resolve
        exist (bool): when True the path is returned only if it exists on the filesystem

    Returns:
        str: the real path, or ``None`` if ``path`` is empty or doesn't exist while ``exist=True``

    Raises:
        LogiParamError: If input path is not of type str
    """

    if not path:
        return

    if not isinstance(path, str):
        raise LogiParamError(
            f"Input must be a string type, {path} is of type {type(path)}"
        )

    real_path = os.path.realpath(os.path.expanduser(os.path.expandvars(path)))
    if os.path.exists(real_path) or not exist:
        return real_path


def read_file(filepath: str) -> str:
    """Read a UTF-8 text file and return its content.

    Raises:
        LogiParamError: if the file cannot be found or read
    """

    if not isinstance(filepath, str):
        raise LogiParamError(
            f"Invalid type for file: {filepath} must be of type 'str' "
        )

    resolved = resolve_path(filepath)
    if not resolved or not os.path.isfile(resolved):
        raise LogiParamError(
            f"Unable to find input file: {filepath}. Please specify a valid file"
        )

    try:
        with open(resolved, "r", encoding="utf-8") as fd:
            return fd.read()
    except (IOError, UnicodeDecodeError) as err:
        raise LogiParamError(f"Failed to read: {resolved}: {err}")


def write_file(filepath: str, content: str) -> None:
    """Write ``content`` to ``filepath``, creating parent directories.

    Raises:
        LogiParamError: if filepath is a directory, content is not a string or the write fails
    """

    if not isinstance(filepath, str):
        raise LogiParamError(
            f"Invalid type for file: {filepath} must be of type 'str' "
        )

    if is_dir(filepath):
        raise LogiParamError(
            f"Detected {filepath} is a directory, please specify a file path."
        )

    if not isinstance(content, str):
        raise LogiParamError(
            f"Expecting type str but got type: {type(content)} when writing file"
        )

    create_dir(os.path.dirname(os.path.abspath(filepath)))
    try:
        with open(filepath, "w", encoding="utf-8") as fd:
            fd.write(content)
    except IOError as err:
        raise LogiParamError(f"Failed to write: {filepath}: {err}")


def load_json(fname: str):
    """Load a JSON document, converting decode failures into LogiParamError.

    Raises:
        LogiParamError: if file is missing or not valid JSON
    """

    content = read_file(fname)
    try:
        return json.loads(content)
    except json.JSONDecodeError as err:
        raise LogiParamError(f"Failed to load JSON content from file: {fname}", err)


def remove_file(fpath: str) -> None:
    """Remove ``fpath`` if it is a file; missing paths are ignored.

    Raises:
        LogiParamError: if the removal fails
    """

    if not fpath or not is_file(fpath):
        return

    try:
        os.remove(fpath)
    except OSError as err:
        raise LogiParamError(f"Unable to delete file: {fpath}: {err}")
