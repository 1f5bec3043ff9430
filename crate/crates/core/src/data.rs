//! Interchange documents for every buildable catalog entry, embedded at
//! compile time. Each file equals the export of the built algebra.

pub fn catalog_json(id: &str) -> Option<&'static str> {
    Some(match id {
        "A64" => include_str!("../data/catalog/A64.json"),
        "L5_1" => include_str!("../data/catalog/L5_1.json"),
        "L6_2" => include_str!("../data/catalog/L6_2.json"),
        "L6_4" => include_str!("../data/catalog/L6_4.json"),
        "L7_6" => include_str!("../data/catalog/L7_6.json"),
        "L7_7" => include_str!("../data/catalog/L7_7.json"),
        "L8_13_0" => include_str!("../data/catalog/L8_13_0.json"),
        "L8_15" => include_str!("../data/catalog/L8_15.json"),
        "L8_21" => include_str!("../data/catalog/L8_21.json"),
        "L8_22" => include_str!("../data/catalog/L8_22.json"),
        "L9_37" => include_str!("../data/catalog/L9_37.json"),
        "L9_41" => include_str!("../data/catalog/L9_41.json"),
        "L9_58" => include_str!("../data/catalog/L9_58.json"),
        "L9_59" => include_str!("../data/catalog/L9_59.json"),
        "L9_60" => include_str!("../data/catalog/L9_60.json"),
        "L9_61" => include_str!("../data/catalog/L9_61.json"),
        "L9_62" => include_str!("../data/catalog/L9_62.json"),
        "L9_63" => include_str!("../data/catalog/L9_63.json"),
        "abelian_1" => include_str!("../data/catalog/abelian_1.json"),
        "abelian_2" => include_str!("../data/catalog/abelian_2.json"),
        "abelian_3" => include_str!("../data/catalog/abelian_3.json"),
        "abelian_4" => include_str!("../data/catalog/abelian_4.json"),
        "abelian_5" => include_str!("../data/catalog/abelian_5.json"),
        "abelian_6" => include_str!("../data/catalog/abelian_6.json"),
        "abelian_7" => include_str!("../data/catalog/abelian_7.json"),
        "abelian_8" => include_str!("../data/catalog/abelian_8.json"),
        "abelian_9" => include_str!("../data/catalog/abelian_9.json"),
        "b3" => include_str!("../data/catalog/b3.json"),
        "f23" => include_str!("../data/catalog/f23.json"),
        "f32" => include_str!("../data/catalog/f32.json"),
        "n3" => include_str!("../data/catalog/n3.json"),
        "n3_c1" => include_str!("../data/catalog/n3_c1.json"),
        "n3_c3" => include_str!("../data/catalog/n3_c3.json"),
        "n3_r2" => include_str!("../data/catalog/n3_r2.json"),
        "n5" => include_str!("../data/catalog/n5.json"),
        "n5_c1" => include_str!("../data/catalog/n5_c1.json"),
        "r2" => include_str!("../data/catalog/r2.json"),
        "r2_c1" => include_str!("../data/catalog/r2_c1.json"),
        "r2_r2" => include_str!("../data/catalog/r2_r2.json"),
        "r2_r2_r2" => include_str!("../data/catalog/r2_r2_r2.json"),
        "sl2" => include_str!("../data/catalog/sl2.json"),
        "sl2_L5_1" => include_str!("../data/catalog/sl2_L5_1.json"),
        "sl2_L6_1" => include_str!("../data/catalog/sl2_L6_1.json"),
        "sl2_L6_2" => include_str!("../data/catalog/sl2_L6_2.json"),
        "sl2_c1" => include_str!("../data/catalog/sl2_c1.json"),
        "sl2_c2" => include_str!("../data/catalog/sl2_c2.json"),
        "sl2_r2" => include_str!("../data/catalog/sl2_r2.json"),
        "sl2_sl2" => include_str!("../data/catalog/sl2_sl2.json"),
        "sl2_sl2_c1" => include_str!("../data/catalog/sl2_sl2_c1.json"),
        "sl2_sl2_sl2" => include_str!("../data/catalog/sl2_sl2_sl2.json"),
        "sl3" => include_str!("../data/catalog/sl3.json"),
        "sl3_c1" => include_str!("../data/catalog/sl3_c1.json"),
        _ => return None,
    })
}
