import sys

from interlace_lab.cli import main

sys.exit(main())
