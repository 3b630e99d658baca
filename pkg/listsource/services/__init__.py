"""Services implementing coding, analysis, encryption and storage."""
