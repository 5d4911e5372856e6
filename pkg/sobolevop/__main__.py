# license: MIT
'''run the sobolevop command line interface'''

import sys

from .cli import main

sys.exit(main())
