app_name = "complex_splines"
app_title = "Complex Splines"
app_publisher = "Complex Splines contributors"
app_description = "Exponential B-splines of complex order: symbols, time series, filters, fractional operators and verification suites."
app_email = ""
app_license = "mit"

