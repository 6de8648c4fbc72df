import sys

from galspin.cli import main

sys.exit(main())
