namespace relwb {}
