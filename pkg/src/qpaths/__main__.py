import sys

from qpaths.cli import main

sys.exit(main())
