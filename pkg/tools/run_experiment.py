# Copyright (c) SI-Analytics. All rights reserved.
from hgc.run import cli

if __name__ == '__main__':
    cli()
