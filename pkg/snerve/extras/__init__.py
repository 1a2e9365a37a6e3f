from snerve.extras.combinatorics import *
from snerve.extras.concurrency import parallel_map, thread_count
