# Threshold graph creation codes
