import sys

from lincode.cli import main

sys.exit(main())
