import sys

from cyclecensus.cli import main

sys.exit(main())
