//! Characters of the symmetric group by the Murnaghan–Nakayama rule.
//!
//!     cargo run --release --example characters [n]

use symcomb::characters::{character, character_table, MnTableau, DEFAULT_TABLE_LIMIT};
use symcomb::Partition;

fn main() -> symcomb::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);

    let table = character_table(n, DEFAULT_TABLE_LIMIT)?;
    let header: Vec<String> = table.classes.iter().map(|c| c.to_string()).collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|j| table.values.iter().map(|r| r[j].to_string().len()).chain([header[j].len()]).max().unwrap_or(1))
        .collect();
    let head: Vec<String> = header.iter().zip(&widths).map(|(h, w)| format!("{h:>w$}")).collect();
    println!("{:>12} | {}", "λ \\ α", head.join(" "));
    for (shape, row) in table.shapes.iter().zip(&table.values) {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(v, w)| format!("{v:>w$}")).collect();
        println!("{:>12} | {}", shape.to_string(), cells.join(" "));
    }

    // A single value at a size well past any printed table.
    let lam: Partition = "10,8,5,3,1".parse()?;
    let alpha: Partition = "4^6,3".parse()?;
    println!("χ^{lam}({alpha}) = {}", character(&lam, &alpha)?);

    // A rim-hook tableau: shape (6,5,5), hooks of lengths 3, 5, 6, 2.
    let t = MnTableau::new(
        vec![vec![1, 1, 2, 3, 3, 3], vec![1, 2, 2, 3, 4], vec![2, 2, 3, 3, 4]],
        &[3, 5, 6, 2],
    )?;
    println!("hook heights {:?}, total {}, sign {}", t.hook_heights(), t.height(), t.sign());
    Ok(())
}
