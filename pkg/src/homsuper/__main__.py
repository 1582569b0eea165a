import sys

from homsuper.cli import main

sys.exit(main())
