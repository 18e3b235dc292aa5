# Copyright (c) SI-Analytics. All rights reserved.
"""The hgc entry point."""
from .run import cli

if __name__ == '__main__':
    cli()
