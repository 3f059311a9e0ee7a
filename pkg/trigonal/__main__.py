import sys

from trigonal.cli.main import main

sys.exit(main())
