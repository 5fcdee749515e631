import sys

from .veritool.cli import main

sys.exit(main())
