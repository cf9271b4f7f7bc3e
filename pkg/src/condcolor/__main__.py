import sys

from condcolor.cli import main

sys.exit(main())
