import sys

from radixinv.cli import main

sys.exit(main())
