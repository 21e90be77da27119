//! The cross-method verification report that backs `toda verify`.
use toda_core::cli::cmd_verify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = cmd_verify(3, 4)?;
    print!("{}", report.render_text());
    println!("{}", serde_json::to_string_pretty(&report.hamiltonians[0])?);
    Ok(())
}
