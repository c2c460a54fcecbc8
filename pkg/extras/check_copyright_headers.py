# -*- coding: utf-8 -*-
#
# check_copyright_headers.py
#
# This file is part of ommlab.
#
# Copyright (C) 2026 The ommlab developers
#
# ommlab is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# ommlab is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with ommlab.  If not, see <http://www.gnu.org/licenses/>.

"""
Check that every Python and TOML file of the repository starts with the
header in "extras/copyright_header_template.py".

Run from the repository root:

    python extras/check_copyright_headers.py

Exits with 1 if any file deviates from the template.
"""

import os
import re
import sys

EXIT_SUCCESS = 0
EXIT_BAD_HEADER = 1

EXCLUDE_DIRS = [".git", "extras", "build", "examples", ".pytest_cache"]

# file names matching any of these are skipped (editor backups, lock files)
EXCLUDE_FILE_PATTERNS = [r"\.#.*", r"#.*", r".*~", r".*\.bak"]

TEMPLATES = {("py", "toml"): "py"}


def load_templates(source_dir):
    contents = {}
    for extensions, template_ext in TEMPLATES.items():
        template_name = os.path.join(
            source_dir, "extras", "copyright_header_template." + template_ext
        )
        with open(template_name, encoding="utf-8") as template_file:
            template = template_file.readlines()
        for ext in extensions:
            contents[ext] = template
    return contents


def candidate_files(source_dir, extensions):
    exclude_regex = [re.compile(pattern) for pattern in EXCLUDE_FILE_PATTERNS]
    for dirpath, _, fnames in os.walk(source_dir):
        rel = os.path.relpath(dirpath, source_dir)
        if any(part in EXCLUDE_DIRS for part in rel.split(os.sep)):
            continue
        for fname in sorted(fnames):
            if any(regex.fullmatch(fname) for regex in exclude_regex):
                continue
            extension = os.path.splitext(fname)[1][1:]
            if extension in extensions:
                yield os.path.join(dirpath, fname), extension


def check_header(file_path, template):
    """
    Returns None for a correct header, otherwise a message naming the
    first deviating line
    """
    fname = os.path.basename(file_path)
    with open(file_path, encoding="utf-8") as source_file:
        for template_line in template:
            try:
                line_src = source_file.readline()
            except UnicodeDecodeError as err:
                return f"unable to decode bytes: {err}"
            if line_src.strip() == "#!/usr/bin/env python3":
                line_src = source_file.readline()
            line_exp = template_line.replace("{{file_name}}", fname)
            if line_src != line_exp:
                return (
                    f"expected '{line_exp.rstrip(chr(10))}', "
                    f"found '{line_src.rstrip(chr(10))}'"
                )
    return None


def main(source_dir):
    templates = load_templates(source_dir)
    total_files, total_errors = 0, 0
    for file_path, extension in candidate_files(source_dir, templates):
        total_files += 1
        msg = check_header(file_path, templates[extension])
        if msg is not None:
            total_errors += 1
            print(f"[COPYRIGHT-HEADER-CHECK] {os.path.relpath(file_path, source_dir)}: {msg}")

    print(f"{total_errors} out of {total_files} files have an erroneous copyright header.")
    return EXIT_BAD_HEADER if total_errors > 0 else EXIT_SUCCESS


if __name__ == "__main__":
    sys.exit(main(os.getcwd()))
