from berndt_closed_forms.series.abstract import (SdTable, SeriesTable, SinhTable, SnSquareTable, SnTable,
                                                 TABLE_TYPES, table_from_json)
from berndt_closed_forms.series.identities import IdentityCheck, check_structural_identities
from berndt_closed_forms.series.maclaurin import (clear_tables, egf_square, gen_q_polys, gen_R_polys, gen_sd_polys,
                                                  gen_sn_polys, get_table, register_table, sd_poly, sinh_poly)
