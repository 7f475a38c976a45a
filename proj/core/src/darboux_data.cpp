#include "darboux_data.hpp"

namespace klein::detail {

const std::vector<RawEntry>& raw_database() {
    static const std::vector<RawEntry> db = {
    {0, nullptr,
     "x*(x+4)^3/(4*(2*x-1)^3)",
     "1/4",
     {{"x", 1}, {"4 + x", 3}, {"-1 + 2*x", -3}},
     {{
      {"tetra1", "1/4", "-1/12", "2/3", {{"1 - 2*x", "-1/4"}}, "1"},
      {"tetra1a", "5/4", "-1/12", "5/3", {{"1 - 2*x", "-1/4"}}, "(1 + x)/(1 + x/4)^2"},
      {"tetra1b", "1/4", "7/12", "4/3", {{"1 - 2*x", "3/4"}}, "1/(1 + x/4)"},
      {"tetra1z", "1/4", "-5/12", "1/3", {{"1 - 2*x", "-5/4"}}, "1 + 5*x/2"}
     }},
     "-4", "0", {"-4"},
     nullptr, nullptr},
    {1, nullptr,
     "x*(x+2)^3/(2*x+1)^3",
     "1",
     {{"x", 1}, {"2 + x", 3}, {"1 + 2*x", -3}},
     {{
      {"tetra2", "1/2", "-1/6", "2/3", {{"1 + 2*x", "-1/2"}}, "1"},
      {"tetra2a", "1/2", "5/6", "2/3", {{"1 + 2*x", "3/2"}}, "1/(1 - x)^2"},
      {"tetra2b", "1/6", "5/6", "4/3", {{"1 + 2*x", "1/2"}, {"1 + x", "1/3"}}, "1/(1 + x/2)"},
      {"tetra2z", "1/6", "-1/6", "1/3", {{"1 + 2*x", "-1/2"}, {"1 + x", "1/3"}}, "1"}
     }},
     "-2", "0", {"-4"},
     nullptr, nullptr},
    {2, nullptr,
     "108*x*(x-1)^4/(x^2+14*x+1)^3",
     "108",
     {{"x", 1}, {"-1 + x", 4}, {"1 + 14*x + x^2", -3}},
     {{
      {"octa1", "7/24", "-1/24", "3/4", {{"1 + 14*x + x^2", "-1/8"}}, "1"},
      {"octa1a", "7/24", "23/24", "7/4", {{"1 + 14*x + x^2", "7/8"}}, "(1 + 2*x - x^2/11)/(1 - x)^3"},
      {"octa1b", "5/24", "13/24", "5/4", {{"1 + 14*x + x^2", "5/8"}}, "1/(1 - x)"},
      {"octa1z", "5/24", "-11/24", "1/4", {{"1 + 14*x + x^2", "-11/8"}}, "1 - 22*x - 11*x^2"}
     }},
     "1", "0", {"1"},
     nullptr, nullptr},
    {3, nullptr,
     "27*x*(x+1)^4/(2*(x^2+4*x+1)^3)",
     "27/2",
     {{"x", 1}, {"1 + x", 4}, {"1 + 4*x + x^2", -3}},
     {{
      {"octa2", "7/12", "-1/12", "3/4", {{"1 + x/2", "1/4"}, {"1 + 4*x + x^2", "-1/4"}}, "1"},
      {"octa2a", "7/12", "11/12", "7/4", {{"1 + x/2", "1/4"}, {"1 + 4*x + x^2", "7/4"}}, "1/(1 + x)^3"},
      {"octa2b", "1/6", "5/6", "5/4", {{"1 + 2*x", "1/4"}, {"1 + 4*x + x^2", "1/2"}}, "1/(1 + x)"},
      {"octa2z", "1/6", "-1/6", "1/4", {{"1 + 2*x", "1/4"}, {"1 + 4*x + x^2", "-1/2"}}, "1"}
     }},
     "-1", "0", {"1"},
     nullptr, nullptr},
    {4, nullptr,
     "1728*x*(x^2-11*x-1)^5/(x^4+228*x^3+494*x^2-228*x+1)^3",
     "1728",
     {{"x", 1}, {"-1 - 11*x + x^2", 5}, {"1 - 228*x + 494*x^2 + 228*x^3 + x^4", -3}},
     {{
      {"icosa1", "19/60", "-1/60", "4/5", {{"1 - 228*x + 494*x^2 + 228*x^3 + x^4", "-1/20"}}, "1"},
      {"icosa1a", "19/60", "59/60", "4/5", {{"1 - 228*x + 494*x^2 + 228*x^3 + x^4", "19/20"}}, "(1 + 66*x - 11*x^2)*(1 + x^2)^-1*(1 + 522*x - 10006*x^2 - 522*x^3 + x^4)^-1"},
      {"icosa1b", "11/60", "31/60", "6/5", {{"1 - 228*x + 494*x^2 + 228*x^3 + x^4", "11/20"}}, "(1 + 11*x - x^2)^-1"},
      {"icosa1z", "11/60", "-29/60", "1/5", {{"1 - 228*x + 494*x^2 + 228*x^3 + x^4", "-29/20"}}, "(1 + 435*x - 6670*x^2 - 3335*x^4 - 87*x^5)"}
     }},
     "11/2+5/2*sqrt(5)", "0", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "-1/x", "xi/x^2"},
    {5, nullptr,
     "1728*x*(x^2-11*x-1)^5/(x^4+228*x^3+494*x^2-228*x+1)^3",
     "1728",
     {{"x", 1}, {"-1 - 11*x + x^2", 5}, {"1 - 228*x + 494*x^2 + 228*x^3 + x^4", -3}},
     {{
      {"icosa2", "13/60", "-7/60", "3/5", {{"1 - 228*x + 494*x^2 + 228*x^3 + x^4", "-7/20"}}, "(1 - 7*x)"},
      {"icosa2a", "13/60", "53/60", "3/5", {{"1 - 228*x + 494*x^2 + 228*x^3 + x^4", "13/20"}}, "(1 + 119*x + 187*x^2 + 17*x^3)*(1 + x^2)^-1*(1 + 522*x - 10006*x^2 - 522*x^3 + x^4)^-1"},
      {"icosa2b", "17/60", "37/60", "7/5", {{"1 - 228*x + 494*x^2 + 228*x^3 + x^4", "17/20"}}, "(1 + x/7)*(1 + 11*x - x^2)^-2"},
      {"icosa2z", "17/60", "-23/60", "2/5", {{"1 - 228*x + 494*x^2 + 228*x^3 + x^4", "-23/20"}}, "(1 + 207*x - 391*x^2 + 1173*x^3 + 46*x^4)"}
     }},
     "11/2+5/2*sqrt(5)", "0", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "-1/x", "xi/x^2"},
    {6, nullptr,
     "64*x*(x^2-x-1)^5/((x^2-1)*(x^2+4*x-1)^5)",
     "64",
     {{"x", 1}, {"-1 - x + x^2", 5}, {"-1 + x", -1}, {"1 + x", -1}, {"-1 + 4*x + x^2", -5}},
     {{
      {"icosa3", "7/20", "-1/20", "4/5", {{"1 + x", "7/20"}, {"1 - x", "-1/20"}, {"1 - 4*x - x^2", "-1/4"}}, "1"},
      {"icosa3a", "7/20", "19/20", "4/5", {{"1 + x", "7/20"}, {"1 - x", "19/20"}, {"1 - 4*x - x^2", "7/4"}}, "(1 + 3*x)*(1 + x^2)^-1*(1 + 22*x - 6*x^2 - 22*x^3 + x^4)^-1"},
      {"icosa3b", "3/20", "11/20", "6/5", {{"1 + x", "3/20"}, {"1 - x", "11/20"}, {"1 - 4*x - x^2", "3/4"}}, "(1 + x - x^2)^-1"},
      {"icosa3z", "3/20", "-9/20", "1/5", {{"1 + x", "3/20"}, {"1 - x", "-9/20"}, {"1 - 4*x - x^2", "-9/4"}}, "(1 + 12*x - 6*x^2 - 2*x^3 - 9*x^4)"}
     }},
     "1/2+1/2*sqrt(5)", "0", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "-1/x", "xi/x^2"},
    {7, "x*(1+33*x-9*x^2)",
     "144*xi*(1+33*x-9*x^2)^2*(1-9*xi+54*x)/(1+21*xi-117*x+9*x*xi-234*x^2)^3",
     "144",
     {{"xi", 1}, {"1 + 33*x - 9*x^2", 2}, {"1 - 9*xi + 54*x", 1}, {"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", -3}},
     {{
      {"ell3a", "3/10", "-1/30", "3/5", {{"1 - 9*xi + 54*x", "1/30"}, {"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", "-1/10"}}, "1"},
      {"ell3b", "3/10", "29/30", "3/5", {{"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", "9/10"}, {"1 - 9*xi + 54*x", "-29/30"}}, "(1 + 9*x)^2*(1 + 198*x - 99*x^2)*(1 - 21*xi - 117*x - 9*x*xi - 234*x^2)^-2"},
      {"ell3c", "7/10", "11/30", "7/5", {{"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", "11/10"}, {"1 - 9*xi + 54*x", "-11/30"}}, "(1 + 33*x - 9*x^2)^-1"},
      {"ell3d", "-3/10", "11/30", "2/5", {{"1 - 9*xi + 54*x", "19/30"}, {"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", "-9/10"}}, "(1 - 15*xi - 72*x - 54*x^2)*(1 + 9*x)^-1"}
     }},
     "11/6+5/6*sqrt(5)", "0", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "-1/(9*x)", "xi/(9*x^2)"},
    {8, "x*(1+33*x-9*x^2)",
     "144*xi*(1+33*x-9*x^2)^2*(1-9*xi+54*x)/(1+21*xi-117*x+9*x*xi-234*x^2)^3",
     "144",
     {{"xi", 1}, {"1 + 33*x - 9*x^2", 2}, {"1 - 9*xi + 54*x", 1}, {"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", -3}},
     {{
      {"ell3k", "-1/10", "17/30", "4/5", {{"1 - 9*xi + 54*x", "13/30"}, {"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", "-3/10"}}, "1"},
      {"ell3l", "9/10", "17/30", "9/5", {{"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", "17/10"}, {"1 - 9*xi + 54*x", "-17/30"}}, "(1 + 3*x/7)*(1 + 33*x - 9*x^2)^-2"},
      {"ell3m", "1/10", "23/30", "6/5", {{"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", "3/10"}, {"1 - 9*xi + 54*x", "7/30"}}, "(xi + 5*x)*(xi)^-1*(1 + 9*x)^-1"},
      {"ell3z", "1/10", "-7/30", "1/5", {{"1 - 9*xi + 54*x", "7/30"}, {"1 + 21*xi - 117*x + 9*x*xi - 234*x^2", "-7/10"}}, "(1 - 21*x)"}
     }},
     "11/6+5/6*sqrt(5)", "0", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "-1/(9*x)", "xi/(9*x^2)"},
    {9, "x*(1+5*x-5*x^2)",
     "432*x*(1-7*xi/5-9*x-x^2)^5*(1+50*x-125*xi^2+450*x*xi-500*x^2)/((5*xi+57*x)*(1+18*xi/5-16*x+x^2)^5*(1+50*x-125*xi^2-450*x*xi-500*x^2))",
     "432",
     {{"x", 1}, {"1 - 7*xi/5 - 9*x - x^2", 5}, {"1 + 50*x - 125*xi^2 + 450*x*xi - 500*x^2", 1}, {"5*xi + 57*x", -1}, {"1 + 18*xi/5 - 16*x + x^2", -5}, {"1 + 50*x - 125*xi^2 - 450*x*xi - 500*x^2", -1}},
     {{
      {"ell4a", "1/6", "-1/30", "4/5", {{"1 - 3*xi/5 - 34*x/5", "1/6"}, {"1 + 3*xi - 20*x", "-1/6"}, {"1 - 125*xi^2 + 50*x - 450*x*xi - 500*x^2", "-1/30"}}, "1"},
      {"ell4b", "1/6", "29/30", "4/5", {{"1 + 3*xi - 20*x", "5/6"}, {"1 - 3*xi/5 - 34*x/5", "1/6"}, {"1 - 125*xi^2 + 50*x - 450*x*xi - 500*x^2", "-1/30"}}, "(1 - 35*xi/4 - 101*x/4)*(1 - 95*xi/4 + 21*xi^2/4 + 83*x/4 + 475*x*xi/4 + 10*x^2)^-1"},
      {"ell4c", "1/6", "11/30", "6/5", {{"1 - 125*xi^2 + 50*x - 450*x*xi - 500*x^2", "11/30"}, {"1 + 3*xi - 20*x", "5/6"}, {"1 - 3*xi/5 - 34*x/5", "1/6"}}, "(1 + 21*xi/4 + 41*x/4)*(1 - 9*x)^-1*(1 - 7*xi/4 - 15*x/2)^-1*(1 + 5*xi + 10*x)^-1"},
      {"ell4d", "1/6", "11/30", "1/5", {{"1 - 125*xi^2 + 50*x - 450*x*xi - 500*x^2", "11/30"}, {"1 + 3*xi - 20*x", "5/6"}, {"1 - 3*xi/5 - 34*x/5", "1/6"}}, "(1 + 21*xi/4 + 41*x/4)*(1 - 95*xi/4 + 21*xi^2/4 + 83*x/4 + 475*x*xi/4 + 10*x^2)^-1*(1 + 5*xi + 10*x)^-1"}
     }},
     "-3/2+7/10*sqrt(5)", "7-3*sqrt(5)", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "-1/(5*x)", "xi/(5*x^2)"},
    {10, "x*(1+5*x-5*x^2)",
     "432*x*(1-7*xi/5-9*x-x^2)^5*(1+50*x-125*xi^2+450*x*xi-500*x^2)/((5*xi+57*x)*(1+18*xi/5-16*x+x^2)^5*(1+50*x-125*xi^2-450*x*xi-500*x^2))",
     "432",
     {{"x", 1}, {"1 - 7*xi/5 - 9*x - x^2", 5}, {"1 + 50*x - 125*xi^2 + 450*x*xi - 500*x^2", 1}, {"5*xi + 57*x", -1}, {"1 + 18*xi/5 - 16*x + x^2", -5}, {"1 + 50*x - 125*xi^2 - 450*x*xi - 500*x^2", -1}},
     {{
      {"ell4k", "-1/6", "13/30", "3/5", {{"1 - 125*xi^2 + 50*x - 450*x*xi - 500*x^2", "13/30"}, {"1 + 3*xi - 20*x", "-5/6"}, {"1 - 3*xi/5 - 34*x/5", "-1/6"}}, "(1 - 3*xi + 2*x)*(1 + 5*xi + 10*x)^-1"},
      {"ell4l", "5/6", "13/30", "3/5", {{"1 - 125*xi^2 + 50*x - 450*x*xi - 500*x^2", "13/30"}, {"1 + 3*xi - 20*x", "13/6"}, {"1 - 3*xi/5 - 34*x/5", "-1/6"}}, "(1 - 7*xi/4 + 25*x/2 - 245*x^2/4)*(1 - 7*xi/20 - 79*x/20)*(1 - 95*xi/4 + 21*xi^2/4 + 83*x/4 + 475*x*xi/4 + 10*x^2)^-2*(1 - 5*x)^-2"},
      {"ell4m", "5/6", "7/30", "7/5", {{"1 - 125*xi^2 + 50*x - 450*x*xi - 500*x^2", "7/30"}, {"1 + 18*xi/5 - 16*x + x^2", "7/6"}, {"1 + x/25", "5/6"}, {"1 - 5*x", "-7/6"}}, "(1 + 5*xi + 10*x)*(1 - 7*xi/5 - 9*x - x^2)^-2"},
      {"ell4z", "-1/6", "7/30", "2/5", {{"1 - 125*xi^2 + 50*x - 450*x*xi - 500*x^2", "7/30"}, {"1 + 18*xi/5 - 16*x + x^2", "-5/6"}, {"1 + x/25", "-1/6"}, {"1 - 5*x", "-7/6"}}, "(1 - 27*xi/5 + 58*x/5 - 2*x^2)"}
     }},
     "-3/2+7/10*sqrt(5)", "7-3*sqrt(5)", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "-1/(5*x)", "xi/(5*x^2)"},
    {11, "x*(1+x)*(1+16*x)",
     "-54*(xi+5*x)^3*(1-2*xi+6*x)^5/((1-16*x^2)*(xi-5*x)^2*(1-2*xi-14*x)^5)",
     "-54",
     {{"xi + 5*x", 3}, {"1 - 2*xi + 6*x", 5}, {"1 - 4*x", -1}, {"1 + 4*x", -1}, {"xi - 5*x", -2}, {"1 - 2*xi - 14*x", -5}},
     {{
      {"ell5a", "-1/15", "8/15", "4/5", {{"1 + 4*x", "8/15"}, {"xi + 5*x", "1/6"}, {"x", "1/15"}, {"1 - 2*xi - 14*x", "-1/3"}, {"xi - 3*x", "-3/10"}}, "1"},
      {"ell5b", "14/15", "8/15", "9/5", {{"1 - 2*xi - 14*x", "8/3"}, {"1 + 4*x", "8/15"}, {"x", "1/15"}, {"xi + 5*x", "-11/6"}, {"xi - 3*x", "-3/10"}}, "(1 + 2*xi/3 + 2*x/3 - 16*x^2/3)*(xi - 5*x)^2*(1 - 2*xi + 6*x)^-4"},
      {"ell5c", "2/15", "11/15", "6/5", {{"1 - 2*xi - 14*x", "2/3"}, {"xi + 5*x", "1/6"}, {"xi - 3*x", "13/10"}, {"1 + 4*x", "-13/15"}, {"x", "-11/15"}}, "(1 - xi + x)*(1 + xi + x)^-1*(1 - 2*xi + 6*x)^-1"},
      {"ell5z", "2/15", "-4/15", "1/5", {{"1 + 4*x", "2/15"}, {"xi + 5*x", "7/6"}, {"xi - 3*x", "3/10"}, {"1 - 2*xi - 14*x", "-4/3"}, {"x", "-11/15"}}, "(1 + 3*xi + x)*(1 + xi + x)^-1"}
     }},
     "-3/8+1/8*sqrt(5)", "-5/8+3/8*sqrt(5)", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "1/(16*x)", "-xi/(16*x^2)"},
    {12, "x*(1+x-x^2)",
     "16*xi*(1+x-x^2)^2*(1-xi)^2/((1+xi+2*x)*(1+xi-2*x)^5)",
     "16",
     {{"xi", 1}, {"1 + x - x^2", 2}, {"1 - xi", 2}, {"1 + xi + 2*x", -1}, {"1 + xi - 2*x", -5}},
     {{
      {"ell6a", "7/10", "-1/10", "4/5", {{"1 - xi + 2*x", "1/15"}, {"1 - xi", "3/5"}, {"1 + xi + 2*x", "-7/30"}, {"1 + xi - 2*x", "-1/2"}}, "1"},
      {"ell6b", "7/10", "9/10", "9/5", {{"1 - xi + 2*x", "1/15"}, {"1 + xi + 2*x", "23/30"}, {"1 + xi - 2*x", "7/2"}, {"1 - xi", "-7/5"}}, "(1 + x - x^2)^-2"},
      {"ell6c", "1/10", "9/10", "6/5", {{"1 + xi", "1/10"}, {"1 - xi", "3/10"}, {"1 - xi + 2*x", "-1/30"}, {"1 + xi + 2*x", "-2/15"}, {"1 + xi - 2*x", "-1/2"}}, "(xi + 2*x + x^2)*(xi)^-1"},
      {"ell6z", "1/10", "-1/10", "1/5", {{"1 + xi", "1/10"}, {"1 - xi", "3/10"}, {"1 - xi + 2*x", "-1/30"}, {"1 + xi + 2*x", "-2/15"}, {"1 + xi - 2*x", "-1/2"}}, "1"}
     }},
     "1/2+1/2*sqrt(5)", "0", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "-1/x", "xi/x^2"},
    {13, "x*(1+x-x^2)",
     "16*xi*(1+x-x^2)^2*(1-xi)^2/((1+xi+2*x)*(1+xi-2*x)^5)",
     "16",
     {{"xi", 1}, {"1 + x - x^2", 2}, {"1 - xi", 2}, {"1 + xi + 2*x", -1}, {"1 + xi - 2*x", -5}},
     {{
      {"ell7a", "3/10", "-1/10", "3/5", {{"1 - xi + 2*x", "2/15"}, {"1 + xi + 2*x", "1/30"}, {"1 - xi", "1/5"}, {"1 + xi - 2*x", "-1/2"}}, "1"},
      {"ell7b", "3/10", "9/10", "8/5", {{"1 - xi + 2*x", "2/15"}, {"1 + xi + 2*x", "1/30"}, {"1 - xi", "1/5"}, {"1 + xi - 2*x", "3/2"}}, "(1 + xi/2 + x/2)*(1 + x - x^2)^-1*(1 - xi + x - x^2)^-1"},
      {"ell7c", "3/10", "7/10", "7/5", {{"1 + xi + 2*x", "7/30"}, {"1 + xi", "1/5"}, {"1 + xi - 2*x", "3/2"}, {"1 - xi + 2*x", "-1/15"}, {"1 - xi", "-2/5"}}, "(1 + x - x^2)^-1"},
      {"ell7z", "3/10", "-3/10", "2/5", {{"1 + xi + 2*x", "7/30"}, {"1 + xi", "1/5"}, {"1 - xi + 2*x", "-1/15"}, {"1 - xi", "-2/5"}, {"1 + xi - 2*x", "-3/2"}}, "(1 - 3*xi + 4*x - 2*x^2)"}
     }},
     "1/2+1/2*sqrt(5)", "0", {"11/2+5/2*sqrt(5)", "11/2-5/2*sqrt(5)"},
     "-1/x", "xi/x^2"},
    };
    return db;
}

}  // namespace klein::detail
