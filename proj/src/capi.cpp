// C API implementation (see include/polylab.h)
