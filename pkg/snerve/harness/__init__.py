from snerve.harness.certificate import counts_table, report_render, parse_certificate
