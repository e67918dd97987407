// A dummy file to fix a warning when Julia parses the C API.
