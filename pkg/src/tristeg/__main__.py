import sys

from tristeg.cli import main

sys.exit(main())
