# -*- coding: utf-8 -*-

"""
Non-monotone conjugate gradient toolkit (``-h for help``)
"""

import sys

import dotenv

from nmcg import cli


config = dotenv.dotenv_values(".env")


if __name__ == "__main__":
    sys.exit(cli(config))
