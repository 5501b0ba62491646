// Matrix files, region exports and an SVG plot written to a temporary
// directory.

use rankrange::engine::{boundary_region, RankRangeQuery};
use rankrange::io::{read_matrix, region_svg, write_matrix, RegionExport};
use rankrange::{ComplexMatrix, C64};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("rankrange-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let a = ComplexMatrix::from_diag(&[C64::new(1.0, 1.0), C64::new(-1.0, 1.0), C64::new(-1.0, -1.0), C64::new(1.0, -1.0)]);
    let json = dir.join("square.json");
    let csv = dir.join("square.csv");
    write_matrix(&json, &a)?;
    write_matrix(&csv, &a)?;
    assert_eq!(read_matrix(&json)?, a);
    assert_eq!(read_matrix(&csv)?, a);

    let r = boundary_region(&RankRangeQuery::new(a, 1)?)?;
    let export = RegionExport::from_result(&r);
    std::fs::write(dir.join("region.csv"), export.to_csv())?;
    std::fs::write(dir.join("region.json"), export.to_json()?)?;
    std::fs::write(dir.join("region.svg"), region_svg(&r.region, true))?;
    println!("{} region written to {}", export.kind.name(), dir.display());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

fn main() {
    run_example().expect("export example");
}
