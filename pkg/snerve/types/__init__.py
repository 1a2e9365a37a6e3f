from snerve.types.enum import *
from snerve.types.error import *
from snerve.types.report import *
from snerve.types.certificate import *
