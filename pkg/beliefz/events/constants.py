CHECK_PASSED = 1
CHECK_FAILED = 2
CHECK_ERROR = 4
