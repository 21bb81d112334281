#[test]
fn run_one_check() {
    let name = std::env::var("CHECK_NAME").unwrap_or_default();
    for check in superkac::verify::all_checks() {
        if !name.is_empty() && check.name != name {
            continue;
        }
        let start = std::time::Instant::now();
        let result = (check.run)();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {:<32} {:>8.2?}  {detail}", check.name, elapsed),
            Err(e) => println!("FAIL {:<32} {:>8.2?}  {e}", check.name, elapsed),
        }
    }
}
