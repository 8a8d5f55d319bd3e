import sys

from petersonring.cli import main

sys.exit(main())
