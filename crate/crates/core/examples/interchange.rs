//! alist and MatrixMarket round trips for sector codes and check matrices.

use flipcss::analytics::CaseLabel;
use flipcss::cli::{parse_mtx, write_mtx};
use flipcss::codes::{emit_alist, matrix_to_alist, parse_alist, random_ldpc, repetition_code};
use flipcss::construct::assemble;

fn main() -> flipcss::Result<()> {
    let rep = repetition_code(4)?;
    let text = emit_alist(&rep);
    print!("rep(4) as alist:\n{text}");
    assert_eq!(parse_alist("rep4", &text)?.h(), rep.h());

    let ldpc = random_ldpc(4, 6, 3, 0)?;
    let again = parse_alist("ldpc", &emit_alist(&ldpc))?;
    assert_eq!(again.h(), ldpc.h());

    let code = assemble(
        &CaseLabel::B.spec(),
        &[rep.clone(), repetition_code(2)?, ldpc],
    )?;
    let mtx = write_mtx(&code.hz);
    println!(
        "hz of case B on (rep4, rep2, ldpc): {} lines of MatrixMarket",
        mtx.lines().count()
    );
    assert_eq!(parse_mtx(&mtx)?, code.hz);
    assert_eq!(
        parse_alist("hx", &matrix_to_alist(&code.hx))?.into_matrix(),
        code.hx
    );

    match parse_alist("broken", "3 3\n2 2\n2 2 2\n") {
        Err(e) => println!("truncated input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
