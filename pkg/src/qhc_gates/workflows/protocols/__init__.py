"""Protocol files of the QHC workflows."""
