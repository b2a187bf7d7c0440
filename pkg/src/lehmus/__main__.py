import sys

from lehmus.cli import main

sys.exit(main())
