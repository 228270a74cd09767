// Embedded verification data. The files under tables/ are exact copies
// (see dump_tables).

#include "rmeasure/tables.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rmeasure {

namespace {

const char* const kTable1 = R"TXT(i	c	theta_lo	theta_hi	polynomial
1	1.3090	0	18.6747	x^2 - 3x + 1
2	1.2056	18.6747	22.0236	x^8 - 12x^7 + 57x^6 - 138x^5 + 183x^4 - 138x^3 + 57x^2 - 12x + 1
3	1.1826	22.0236	24.7788	x^10 - 14x^9 + 84x^8 - 279x^7 + 559x^6 - 699x^5 + 556x^4 - 278x^3 + 84x^2 - 14x + 1
4	1.1150	24.7788	26.52	x^10 - 13x^9 + 74x^8 - 237x^7 + 465x^6 - 577x^5 + 461x^4 - 235x^3 + 74x^2 - 13x + 1
5	0.9545	29.3238	37.14	x^6 - 7x^5 + 20x^4 - 26x^3 + 18x^2 - 6x + 1
6	0.7959	41.1904	48.23	x^12 - 11x^11 + 59x^10 - 193x^9 + 426x^8 - 664x^7 + 753x^6 - 628x^5 + 385x^4 - 170x^3 + 52x^2 - 10x + 1
7	0.7749	59.0157	65.13	x^3 - 3x^2 + 2x - 1
8	0.6356	70.5648	79.52	x^8 - 3x^7 + 11x^6 - 14x^5 + 19x^4 - 13x^3 + 9x^2 - 3x + 1
9	0.5849	80.6561	88.45	x^3 - 2x^2 + x - 1
)TXT";

const char* const kMainAux = R"TXT(# 45-term auxiliary function on the positive half-line.
# Term 37 uses 230x^11. The variant with 240x^11 has global minimum near 1.578.
weight: positive-real
term: 0.5008445005 ; x
term: 0.7321846911 ; x - 1
term: 0.009961245418 ; x - 2
term: 0.2058419140 ; x^2 - 3x + 1
term: 0.01139295106 ; x^2 - 4x + 1
term: 0.03566534948 ; x^2 - 4x + 2
term: 0.01409225804 ; x^3 - 5x^2 + 6x - 1
term: 0.03246301982 ; x^4 - 7x^3 + 13x^2 - 7x + 1
term: 0.05282943416 ; x^4 - 7x^3 + 14x^2 - 8x + 1
term: 0.0008126498980 ; x^4 - 7x^3 + 15x^2 - 9x + 1
term: 0.003182461038 ; x^5 - 9x^4 + 28x^3 - 35x^2 + 15x - 1
term: 0.003958900567 ; x^6 - 11x^5 + 42x^4 - 67x^3 + 45x^2 - 12x + 1
term: 0.005492456974 ; x^6 - 11x^5 + 42x^4 - 68x^3 + 46x^2 - 12x + 1
term: 0.005031661044 ; x^6 - 11x^5 + 42x^4 - 68x^3 + 47x^2 - 13x + 1
term: 0.004334709222 ; x^6 - 11x^5 + 43x^4 - 72x^3 + 50x^2 - 13x + 1
term: 0.009820527616 ; x^6 - 11x^5 + 43x^4 - 72x^3 + 51x^2 - 14x + 1
term: 0.01135524303 ; x^6 - 11x^5 + 43x^4 - 73x^3 + 53x^2 - 15x + 1
term: 0.0002427288270 ; x^7 - 12x^6 + 55x^5 - 122x^4 + 136x^3 - 71x^2 + 15x - 1
term: 0.003433846141 ; x^8 - 14x^7 + 78x^6 - 219x^5 + 326x^4 - 253x^3 + 98x^2 - 17x + 1
term: 0.001656631322 ; x^8 - 15x^7 + 87x^6 - 248x^5 + 366x^4 - 275x^3 + 102x^2 - 17x + 1
term: 0.001767313839 ; x^8 - 15x^7 + 87x^6 - 248x^5 + 368x^4 - 283x^3 + 108x^2 - 18x + 1
term: 0.0003731701390 ; x^8 - 15x^7 + 87x^6 - 249x^5 + 373x^4 - 290x^3 + 112x^2 - 19x + 1
term: 0.0003232766910 ; x^8 - 15x^7 + 88x^6 - 256x^5 + 390x^4 - 308x^3 + 120x^2 - 20x + 1
term: 0.0001508532140 ; x^8 - 15x^7 + 88x^6 - 257x^5 + 395x^4 - 315x^3 + 124x^2 - 21x + 1
term: 0.002549276145 ; x^9 - 16x^8 + 103x^7 - 345x^6 + 651x^5 - 703x^4 + 424x^3 - 135x^2 + 20x - 1
term: 0.001607900164 ; x^9 - 17x^8 + 113x^7 - 378x^6 + 687x^5 - 694x^4 + 392x^3 - 120x^2 + 18x - 1
term: 0.001336777572 ; x^9 - 17x^8 + 117x^7 - 423x^6 + 872x^5 - 1043x^4 + 709x^3 - 260x^2 + 46x - 3
term: 0.001370580380 ; x^9 - 17x^8 + 118x^7 - 433x^6 + 910x^5 - 1112x^4 + 770x^3 - 284x^2 + 49x - 3
term: 0.001143633454 ; x^9 - 17x^8 + 118x^7 - 433x^6 + 910x^5 - 1112x^4 + 771x^3 - 286x^2 + 50x - 3
term: 0.001036283257 ; x^12 - 22x^11 + 205x^10 - 1060x^9 + 3352x^8 - 6752x^7 + 8783x^6 - 7362x^5 + 3922x^4 - 1290x^3 + 248x^2 - 25x + 1
term: 0.0006162043990 ; x^12 - 22x^11 + 205x^10 - 1061x^9 + 3364x^8 - 6809x^7 + 8922x^6 - 7551x^5 + 4068x^4 - 1352x^3 + 261x^2 - 26x + 1
term: 0.003161798923 ; x^12 - 22x^11 + 206x^10 - 1075x^9 + 3443x^8 - 7042x^7 + 9313x^6 - 7935x^5 + 4289x^4 - 1425x^3 + 274x^2 - 27x + 1
term: 0.0001956683210 ; x^12 - 22x^11 + 206x^10 - 1075x^9 + 3445x^8 - 7062x^7 + 9390x^6 - 8081x^5 + 4435x^4 - 1502x^3 + 294x^2 - 29x + 1
term: 0.004001617485 ; x^12 - 22x^11 + 206x^10 - 1076x^9 + 3454x^8 - 7088x^7 + 9405x^6 - 8025x^5 + 4324x^4 - 1421x^3 + 268x^2 - 26x + 1
term: 0.0008323284600 ; 2x^12 - 40x^11 + 341x^10 - 1625x^9 + 4776x^8 - 9026x^7 + 11124x^6 - 8915x^5 + 4572x^4 - 1452x^3 + 269x^2 - 26x + 1
term: 0.002890766811 ; x^13 - 23x^12 + 229x^11 - 1299x^10 + 4650x^9 - 10998x^8 + 17507x^7 - 18781x^6 + 13423x^5 - 6246x^4 + 1821x^3 - 312x^2 + 28x - 1
term: 0.003128903368 ; x^13 - 23x^12 + 230x^11 - 1315x^10 + 4757x^9 - 11390x^8 + 18374x^7 - 19985x^6 + 14481x^5 - 6823x^4 + 2006x^3 - 343x^2 + 30x - 1
term: 0.001037286229 ; x^13 - 24x^12 + 249x^11 - 1468x^10 + 5442x^9 - 13271x^8 + 21673x^7 - 23719x^6 + 17176x^5 - 8021x^4 + 2313x^3 - 383x^2 + 32x - 1
term: 0.0001021767400 ; x^14 - 26x^13 + 295x^12 - 1923x^11 + 7984x^10 - 22143x^9 + 41918x^8 - 54519x^7 + 48539x^6 - 29219x^5 + 11619x^4 - 2932x^3 + 438x^2 - 34x + 1
term: 0.001625476863 ; x^15 - 28x^14 + 346x^13 - 2489x^12 + 11581x^11 - 36641x^10 + 80737x^9 - 124960x^8 + 135590x^7 - 102137x^6 + 52523x^5 - 17972x^4 + 3933x^3 - 516x^2 + 36x - 1
term: 0.000034448337 ; x^15 - 28x^14 + 346x^13 - 2490x^12 + 11600x^11 - 36794x^10 + 81420x^9 - 126818x^8 + 138784x^7 - 105631x^6 + 54930x^5 - 18994x^4 + 4190x^3 - 551x^2 + 38x - 1
term: 0.0005112804780 ; x^16 - 29x^15 + 374x^14 - 2834x^13 + 14049x^12 - 48034x^11 + 116438x^10 - 202803x^9 + 254832x^8 - 230369x^7 + 148496x^6 - 67170x^5 + 20780x^4 - 4223x^3 + 528x^2 - 36x + 1
term: 0.00004659004 ; x^17 - 32x^16 + 461x^15 - 3955x^14 + 22529x^13 - 89971x^12 + 259394x^11 - 548151x^10 + 854111x^9 - 980592x^8 + 824398x^7 - 501737x^6 + 217134x^5 - 65031x^4 + 12929x^3 - 1595x^2 + 108x - 3
term: 0.0005542589550 ; x^19 - 35x^18 + 555x^17 - 5283x^16 + 33724x^15 - 152792x^14 + 507345x^13 - 1257638x^12 + 2350236x^11 - 3323520x^10 + 3553401x^9 - 2858959x^8 + 1716527x^7 - 759455x^6 + 243133x^5 - 54843x^4 + 8372x^3 - 810x^2 + 44x - 1
term: 0.0001004560770 ; x^21 - 39x^20 + 697x^19 - 7572x^18 + 55935x^17 - 297818x^16 + 1182276x^15 - 3571706x^14 + 8311413x^13 - 14992263x^12 + 21005663x^11 - 22827774x^10 + 19156176x^9 - 12320417x^8 + 6007333x^7 - 2187000x^6 + 581935x^5 - 109814x^4 + 14062x^3 - 1141x^2 + 52x - 1
)TXT";

const char* const kTable3[9] = {
    R"TXT(# f1: upper edge of the sector at the right end of interval 1.
weight: sector 18.6747
term: 0.5289084 ; x
term: 1.1979024 ; x - 1
term: 0.1583128 ; x^2 - 3x + 1
term: 0.0146431 ; x^4 - 6x^3 + 12x^2 - 7x + 1
term: 0.0017993 ; x^4 - 7x^3 + 15x^2 - 7x + 1
term: 0.0023845 ; x^5 - 7x^4 + 17x^3 - 15x^2 + 6x - 1
term: 0.0047681 ; x^5 - 8x^4 + 23x^3 - 26x^2 + 9x - 1
term: 0.0102697 ; x^8 - 12x^7 + 59x^6 - 150x^5 + 207x^4 - 152x^3 + 60x^2 - 12x + 1
term: 0.0010642 ; x^9 - 14x^8 + 82x^7 - 257x^6 + 461x^5 - 475x^4 + 277x^3 - 90x^2 + 15x - 1
term: 0.0009475 ; x^12 - 19x^11 + 159x^10 - 765x^9 + 2322x^8 - 4603x^7 + 5995x^6 - 5085x^5 + 2775x^4 - 954x^3 + 197x^2 - 22x + 1
term: 0.0014042 ; x^13 - 20x^12 + 178x^11 - 924x^10 + 3087x^9 - 6925x^8 + 10599x^7 - 11086x^6 + 7872x^5 - 3737x^4 + 1153x^3 - 219x^2 + 23x - 1
term: 0.0020204 ; x^13 - 20x^12 + 179x^11 - 940x^10 + 3198x^9 - 7360x^8 + 11654x^7 - 12725x^6 + 9518x^5 - 4803x^4 + 1593x^3 - 331x^2 + 39x - 2
term: 0.0007091 ; x^17 - 26x^16 + 310x^15 - 2240x^14 + 10929x^13 - 37997x^12 + 96909x^11 - 184101x^10 + 262266x^9 - 280453x^8 + 224405x^7 - 133418x^6 + 58258x^5 - 18338x^4 + 4035x^3 - 588x^2 + 51x - 2
term: 0.0002854 ; x^17 - 27x^16 + 334x^15 - 2500x^14 + 12605x^13 - 45137x^12 + 118044x^11 - 228657x^10 + 329868x^9 - 354393x^8 + 282439x^7 - 165755x^6 + 70809x^5 - 21621x^4 + 4580x^3 - 639x^2 + 53x - 2
)TXT",
    R"TXT(# f2: upper edge of the sector at the right end of interval 2.
weight: sector 22.0236
term: 0.6162091 ; x
term: 1.2964504 ; x - 1
term: 0.0259849 ; x^4 - 5x^3 + 9x^2 - 5x + 1
term: 0.0115318 ; x^8 - 12x^7 + 57x^6 - 138x^5 + 183x^4 - 138x^3 + 57x^2 - 12x + 1
)TXT",
    R"TXT(# f3: upper edge of the sector at the right end of interval 3.
weight: sector 24.7788
term: 0.5489624 ; x
term: 1.4844026 ; x - 1
term: 0.0025128 ; x^3 - 5x^2 + 8x - 1
term: 0.0108720 ; x^3 - 5x^2 + 8x - 2
term: 0.0019235 ; x^4 - 5x^3 + 9x^2 - 5x + 1
term: 0.0297702 ; x^4 - 6x^3 + 12x^2 - 6x + 1
term: 0.0008946 ; x^10 - 13x^9 + 74x^8 - 237x^7 + 465x^6 - 577x^5 + 461x^4 - 235x^3 + 74x^2 - 13x + 1
term: 0.0005765 ; x^10 - 13x^9 + 76x^8 - 254x^7 + 523x^6 - 675x^5 + 549x^4 - 277x^3 + 84x^2 - 14x + 1
term: 0.0018538 ; x^10 - 14x^9 + 84x^8 - 279x^7 + 559x^6 - 699x^5 + 556x^4 - 278x^3 + 84x^2 - 14x + 1
)TXT",
    R"TXT(# f4: upper edge of the sector at the right end of interval 4.
weight: sector 26.52
term: 0.5201620 ; x
term: 1.4423358 ; x - 1
term: 0.0030825 ; x^4 - 5x^3 + 9x^2 - 5x + 1
term: 0.0078114 ; x^4 - 6x^3 + 12x^2 - 6x + 1
term: 0.0002073 ; x^4 - 6x^3 + 13x^2 - 9x + 2
term: 0.0061925 ; x^9 - 13x^8 + 74x^7 - 235x^6 + 448x^5 - 519x^4 + 363x^3 - 147x^2 + 32x - 3
term: 0.0025548 ; x^10 - 13x^9 + 74x^8 - 237x^7 + 465x^6 - 577x^5 + 461x^4 - 235x^3 + 74x^2 - 13x + 1
term: 0.0112661 ; x^10 - 14x^9 + 85x^8 - 287x^7 + 585x^6 - 739x^5 + 585x^4 - 287x^3 + 85x^2 - 14x + 1
term: 0.0054884 ; x^11 - 16x^10 + 113x^9 - 459x^8 + 1175x^7 - 1962x^6 + 2153x^5 - 1541x^4 + 702x^3 - 195x^2 + 30x - 2
)TXT",
    R"TXT(# f5: upper edge of the sector at the right end of interval 5.
weight: sector 37.14
term: 0.3847549 ; x
term: 1.6362297 ; x - 1
term: 0.0014820 ; x^3 - 5x^2 + 6x - 3
term: 0.0161531 ; x^4 - 6x^3 + 9x^2 - 6x + 1
term: 0.0053063 ; x^5 - 6x^4 + 15x^3 - 16x^2 + 8x - 1
term: 0.0097617 ; x^5 - 6x^4 + 16x^3 - 19x^2 + 11x - 2
term: 0.0032835 ; x^5 - 7x^4 + 21x^3 - 25x^2 + 14x - 2
term: 0.0030144 ; x^6 - 7x^5 + 20x^4 - 26x^3 + 18x^2 - 6x + 1
term: 0.0336132 ; x^6 - 7x^5 + 21x^4 - 29x^3 + 21x^2 - 7x + 1
term: 0.0038884 ; x^9 - 11x^8 + 54x^7 - 149x^6 + 249x^5 - 262x^4 + 171x^3 - 65x^2 + 12x - 1
)TXT",
    R"TXT(# f6: upper edge of the sector at the right end of interval 6.
weight: sector 48.23
term: 0.4905858 ; x
term: 0.5570788 ; x^2 - x + 1
term: 0.0154263 ; 2x^2 - 2x + 1
term: 0.0411941 ; x^6 - 5x^5 + 13x^4 - 17x^3 + 13x^2 - 5x + 1
term: 0.0412271 ; x^6 - 6x^5 + 17x^4 - 24x^3 + 20x^2 - 9x + 2
term: 0.0180762 ; x^8 - 7x^7 + 25x^6 - 47x^5 + 55x^4 - 41x^3 + 20x^2 - 6x + 1
term: 0.0011716 ; x^12 - 11x^11 + 59x^10 - 193x^9 + 426x^8 - 664x^7 + 753x^6 - 628x^5 + 385x^4 - 170x^3 + 52x^2 - 10x + 1
)TXT",
    R"TXT(# f7: upper edge of the sector at the right end of interval 7.
weight: sector 65.13
term: 0.8142115 ; x
term: 0.4626446 ; x^2 - x + 1
term: 0.0892643 ; 2x^2 - x + 1
term: 0.0032516 ; x^3 - 3x^2 + 2x - 1
)TXT",
    R"TXT(# f8: upper edge of the sector at the right end of interval 8.
weight: sector 79.52
term: 0.6031426 ; x
term: 0.5698249 ; x^2 + 1
term: 0.0092448 ; x^3 - 2x^2 + x - 1
term: 0.0348091 ; x^4 - x^3 + 3x^2 - x + 1
term: 0.0323116 ; x^6 - 2x^5 + 6x^4 - 5x^3 + 6x^2 - 2x + 1
term: 0.0094454 ; x^8 - 2x^7 + 10x^6 - 12x^5 + 21x^4 - 14x^3 + 13x^2 - 4x + 2
term: 0.0007558 ; x^8 - 3x^7 + 11x^6 - 14x^5 + 19x^4 - 13x^3 + 9x^2 - 3x + 1
)TXT",
    R"TXT(# f9: upper edge of the sector at the right end of interval 9.
weight: sector 88.45
term: 0.9623100 ; x
term: 0.5421284 ; x^2 + 1
term: 0.0006719 ; x^3 - 2x^2 + x - 1
)TXT",
};

const char* const kMainVariant37 = "x^13 - 23x^12 + 240x^11 - 1315x^10 + 4757x^9 - 11390x^8 + 18374x^7 - 19985x^6 + 14481x^5 - 6823x^4 + 2006x^3 - 343x^2 + 30x - 1";

std::vector<SectorRow> parse_table1() {
  std::vector<SectorRow> rows;
  std::istringstream in(kTable1);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string i, c, lo, hi, poly;
    std::getline(ls, i, '\t');
    std::getline(ls, c, '\t');
    std::getline(ls, lo, '\t');
    std::getline(ls, hi, '\t');
    std::getline(ls, poly);
    rows.push_back({std::stoi(i), std::stod(c), std::stod(lo), std::stod(hi), parse_polynomial(poly)});
  }
  return rows;
}

}  // namespace

const std::vector<SectorRow>& table1() {
  static const std::vector<SectorRow> rows = parse_table1();
  return rows;
}

const AuxFunction& theorem2_function() {
  static const AuxFunction f = parse_aux(kMainAux);
  return f;
}

AuxFunction theorem2_function_variant() {
  AuxFunction f = theorem2_function();
  f.terms.at(36).q = parse_polynomial(kMainVariant37);
  return f;
}

std::vector<IntPolynomial> theorem2_exceptions() {
  std::vector<IntPolynomial> out;
  for (const char* s : {"x - 1", "x^2 - 3x + 1", "x^3 - 5x^2 + 6x - 1", "x^4 - 7x^3 + 13x^2 - 7x + 1",
                        "x^4 - 7x^3 + 14x^2 - 8x + 1", "x^6 - 11x^5 + 43x^4 - 73x^3 + 53x^2 - 15x + 1"})
    out.push_back(parse_polynomial(s));
  return out;
}

std::vector<double> theorem2_exception_values() { return {0.0, 1.3090, 1.6006, 1.5570, 1.5413, 1.6130}; }

const AuxFunction& sector_function(int i) {
  static const std::vector<AuxFunction> fs = [] {
    std::vector<AuxFunction> v;
    for (const char* s : kTable3) v.push_back(parse_aux(s));
    return v;
  }();
  if (i < 1 || i > 9) throw std::out_of_range("f_i index must be 1..9");
  return fs[static_cast<std::size_t>(i - 1)];
}

std::string table1_tsv() { return kTable1; }
std::string theorem2_aux() { return kMainAux; }
std::string sector_aux(int i) {
  if (i < 1 || i > 9) throw std::out_of_range("f_i index must be 1..9");
  return kTable3[i - 1];
}

void dump_tables(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const std::string& body) {
    std::ofstream out(fs::path(dir) / name);
    if (!out) throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
    out << body;
  };
  put("table1.tsv", kTable1);
  put("theorem2.aux", kMainAux);
  for (int i = 1; i <= 9; ++i) put("f" + std::to_string(i) + ".aux", kTable3[i - 1]);
}

}  // namespace rmeasure
