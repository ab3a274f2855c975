import sys

from dyckgen.cli import main

sys.exit(main())
