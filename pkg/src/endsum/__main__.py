import sys

from endsum.cli import main

sys.exit(main())
