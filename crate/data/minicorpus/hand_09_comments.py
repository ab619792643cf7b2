#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Module comment.

import os  # operating system


def walk(root):
    # collect every file below root
    found = []
    for entry in os.listdir(root):
        # skip hidden entries
        if entry.startswith('.'):
            continue

        found.append(os.path.join(root, entry))
    # done
    return found
