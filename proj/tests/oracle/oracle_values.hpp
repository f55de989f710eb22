#pragma once

// Generated by tests/oracle/generate.py; do not edit by hand.

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

namespace oracle {

// Carmichael counts up to 10^3 .. 10^7.
inline constexpr std::array<std::pair<std::uint64_t, std::size_t>, 5> kCarmichaelCounts{{
    {1000u, 1u},
    {10000u, 7u},
    {100000u, 16u},
    {1000000u, 43u},
    {10000000u, 105u},
}};
inline constexpr std::uint64_t kCarmichaelSumTo1e7 = 321248929u;
inline constexpr std::array<std::uint64_t, 43> kCarmichaelTo1e6{{
    561u, 1105u, 1729u, 2465u, 2821u, 6601u, 8911u, 10585u, 15841u, 29341u, 41041u, 46657u, 52633u, 62745u, 63973u, 75361u, 101101u, 115921u, 126217u, 162401u, 172081u, 188461u, 252601u, 278545u, 294409u, 314821u, 334153u, 340561u, 399001u, 410041u, 449065u, 488881u, 512461u, 530881u, 552721u, 656601u, 658801u, 670033u, 748657u, 825265u, 838201u, 852841u, 997633u}};

// Sums of phi and lambda over 1..10^4, and of the Jacobi symbol (a/n) over a < n, odd n < 500.
inline constexpr std::uint64_t kPhiSum1e4 = 30397486u;
inline constexpr std::uint64_t kLambdaSum1e4 = 13777264u;
inline constexpr std::int64_t kJacobiWeightedSum = 345880;

// Invariant factors of (Z/N)^x for N <= 200, packed as N, count, factors...
inline constexpr std::array<std::uint64_t, 744> kUnitInvariants{{
    1u, 0u, 2u, 0u, 3u, 1u, 2u, 4u, 1u, 2u, 5u, 1u, 4u, 6u, 1u, 2u, 7u, 1u, 6u, 8u, 2u, 2u, 2u, 9u, 1u, 6u, 10u, 1u, 4u, 11u, 1u, 10u, 12u, 2u, 2u, 2u, 13u, 1u, 12u, 14u, 1u, 6u, 15u, 2u, 2u, 4u, 16u, 2u, 2u, 4u, 17u, 1u, 16u, 18u, 1u, 6u, 19u, 1u, 18u, 20u, 2u, 2u, 4u, 21u, 2u, 2u, 6u, 22u, 1u, 10u, 23u, 1u, 22u, 24u, 3u, 2u, 2u, 2u, 25u, 1u, 20u, 26u, 1u, 12u, 27u, 1u, 18u, 28u, 2u, 2u, 6u, 29u, 1u, 28u, 30u, 2u, 2u, 4u, 31u, 1u, 30u, 32u, 2u, 2u, 8u, 33u, 2u, 2u, 10u, 34u, 1u, 16u, 35u, 2u, 2u, 12u, 36u, 2u, 2u, 6u, 37u, 1u, 36u, 38u, 1u, 18u, 39u, 2u, 2u, 12u, 40u, 3u, 2u, 2u, 4u, 41u, 1u, 40u, 42u, 2u, 2u, 6u, 43u, 1u, 42u, 44u, 2u, 2u, 10u, 45u, 2u, 2u, 12u, 46u, 1u, 22u, 47u, 1u, 46u, 48u, 3u, 2u, 2u, 4u, 49u, 1u, 42u, 50u, 1u, 20u, 51u, 2u, 2u, 16u, 52u, 2u, 2u, 12u, 53u, 1u, 52u, 54u, 1u, 18u, 55u, 2u, 2u, 20u, 56u, 3u, 2u, 2u, 6u, 57u, 2u, 2u, 18u, 58u, 1u, 28u, 59u, 1u, 58u, 60u, 3u, 2u, 2u, 4u, 61u, 1u, 60u, 62u, 1u, 30u, 63u, 2u, 6u, 6u, 64u, 2u, 2u, 16u, 65u, 2u, 4u, 12u, 66u, 2u, 2u, 10u, 67u, 1u, 66u, 68u, 2u, 2u, 16u, 69u, 2u, 2u, 22u, 70u, 2u, 2u, 12u, 71u, 1u, 70u, 72u, 3u, 2u, 2u, 6u, 73u, 1u, 72u, 74u, 1u, 36u, 75u, 2u, 2u, 20u, 76u, 2u, 2u, 18u, 77u, 2u, 2u, 30u, 78u, 2u, 2u, 12u, 79u, 1u, 78u, 80u, 3u, 2u, 4u, 4u, 81u, 1u, 54u, 82u, 1u, 40u, 83u, 1u, 82u, 84u, 3u, 2u, 2u, 6u, 85u, 2u, 4u, 16u, 86u, 1u, 42u, 87u, 2u, 2u, 28u, 88u, 3u, 2u, 2u, 10u, 89u, 1u, 88u, 90u, 2u, 2u, 12u, 91u, 2u, 6u, 12u, 92u, 2u, 2u, 22u, 93u, 2u, 2u, 30u, 94u, 1u, 46u, 95u, 2u, 2u, 36u, 96u, 3u, 2u, 2u, 8u, 97u, 1u, 96u, 98u, 1u, 42u, 99u, 2u, 2u, 30u, 100u, 2u, 2u, 20u, 101u, 1u, 100u, 102u, 2u, 2u, 16u, 103u, 1u, 102u, 104u, 3u, 2u, 2u, 12u, 105u, 3u, 2u, 2u, 12u, 106u, 1u, 52u, 107u, 1u, 106u, 108u, 2u, 2u, 18u, 109u, 1u, 108u, 110u, 2u, 2u, 20u, 111u, 2u, 2u, 36u, 112u, 3u, 2u, 2u, 12u, 113u, 1u, 112u, 114u, 2u, 2u, 18u, 115u, 2u, 2u, 44u, 116u, 2u, 2u, 28u, 117u, 2u, 6u, 12u, 118u, 1u, 58u, 119u, 2u, 2u, 48u, 120u, 4u, 2u, 2u, 2u, 4u, 121u, 1u, 110u, 122u, 1u, 60u, 123u, 2u, 2u, 40u, 124u, 2u, 2u, 30u, 125u, 1u, 100u, 126u, 2u, 6u, 6u, 127u, 1u, 126u, 128u, 2u, 2u, 32u, 129u, 2u, 2u, 42u, 130u, 2u, 4u, 12u, 131u, 1u, 130u, 132u, 3u, 2u, 2u, 10u, 133u, 2u, 6u, 18u, 134u, 1u, 66u, 135u, 2u, 2u, 36u, 136u, 3u, 2u, 2u, 16u, 137u, 1u, 136u, 138u, 2u, 2u, 22u, 139u, 1u, 138u, 140u, 3u, 2u, 2u, 12u, 141u, 2u, 2u, 46u, 142u, 1u, 70u, 143u, 2u, 2u, 60u, 144u, 3u, 2u, 2u, 12u, 145u, 2u, 4u, 28u, 146u, 1u, 72u, 147u, 2u, 2u, 42u, 148u, 2u, 2u, 36u, 149u, 1u, 148u, 150u, 2u, 2u, 20u, 151u, 1u, 150u, 152u, 3u, 2u, 2u, 18u, 153u, 2u, 2u, 48u, 154u, 2u, 2u, 30u, 155u, 2u, 2u, 60u, 156u, 3u, 2u, 2u, 12u, 157u, 1u, 156u, 158u, 1u, 78u, 159u, 2u, 2u, 52u, 160u, 3u, 2u, 4u, 8u, 161u, 2u, 2u, 66u, 162u, 1u, 54u, 163u, 1u, 162u, 164u, 2u, 2u, 40u, 165u, 3u, 2u, 2u, 20u, 166u, 1u, 82u, 167u, 1u, 166u, 168u, 4u, 2u, 2u, 2u, 6u, 169u, 1u, 156u, 170u, 2u, 4u, 16u, 171u, 2u, 6u, 18u, 172u, 2u, 2u, 42u, 173u, 1u, 172u, 174u, 2u, 2u, 28u, 175u, 2u, 2u, 60u, 176u, 3u, 2u, 2u, 20u, 177u, 2u, 2u, 58u, 178u, 1u, 88u, 179u, 1u, 178u, 180u, 3u, 2u, 2u, 12u, 181u, 1u, 180u, 182u, 2u, 6u, 12u, 183u, 2u, 2u, 60u, 184u, 3u, 2u, 2u, 22u, 185u, 2u, 4u, 36u, 186u, 2u, 2u, 30u, 187u, 2u, 2u, 80u, 188u, 2u, 2u, 46u, 189u, 2u, 6u, 18u, 190u, 2u, 2u, 36u, 191u, 1u, 190u, 192u, 3u, 2u, 2u, 16u, 193u, 1u, 192u, 194u, 1u, 96u, 195u, 3u, 2u, 4u, 12u, 196u, 2u, 2u, 42u, 197u, 1u, 196u, 198u, 2u, 2u, 30u, 199u, 1u, 198u, 200u, 3u, 2u, 2u, 20u}};

// Davenport constants by exhaustive search over zero-sum-free multisets.
inline constexpr std::array<std::pair<std::string_view, std::uint64_t>, 14> kDavenport{{
    {"2", 2u},
    {"3", 3u},
    {"4", 4u},
    {"5", 5u},
    {"6", 6u},
    {"7", 7u},
    {"8", 8u},
    {"2,2", 3u},
    {"2,4", 5u},
    {"3,3", 5u},
    {"2,2,2", 4u},
    {"2,6", 7u},
    {"4,4", 7u},
    {"2,8", 9u},
}};

// Ideals of Z[zeta_3] coprime to 3 with norm <= Q, from the divisor-sum formula.
inline constexpr std::uint64_t kIdealCount100 = 41u;
inline constexpr std::uint64_t kIdealCount1000 = 405u;
inline constexpr std::uint64_t kIdealCount10000 = 4031u;
// Partial sums of |nu| N^-s, 40 significant digits, by a per-norm multiplicative formula.
inline constexpr std::string_view kZeta_7_12_1000 = "2.719854454054776841757151577760284015088";
inline constexpr std::string_view kZeta_7_12_10000 = "3.38381567602578716377283124313223035724";
inline constexpr std::string_view kZeta_7_12_100000 = "3.969484588603663973378152703265451954553";
inline constexpr std::string_view kZeta_1_3_1000 = "6.129559137907470922768962195310254048057";
inline constexpr std::string_view kZeta_1_3_10000 = "11.22945435782103455097826278418510237222";
inline constexpr std::string_view kZeta_1_3_100000 = "19.24952194615645062917537433831985277841";
inline constexpr std::string_view kZeta_1_1_1000 = "1.432853068569059065871752984650127237528";
inline constexpr std::string_view kZeta_1_1_10000 = "1.456658833843310029532322887693065450124";
inline constexpr std::string_view kZeta_1_1_100000 = "1.464563143726099495354269106117695527968";
inline constexpr std::uint64_t kAbsNuTerms1e5 = 383u;

// Least-prime sequence q_i with no earlier term dividing q_i - 1.
inline constexpr std::array<std::uint64_t, 25> kErdos{{3u, 5u, 17u, 23u, 29u, 53u, 83u, 89u, 113u, 149u, 173u, 197u, 257u, 263u, 269u, 293u, 317u, 353u, 359u, 383u, 389u, 419u, 449u, 467u, 479u}};
inline constexpr std::uint64_t kErdosRatio5Num = 78848u;
inline constexpr std::uint64_t kErdosRatio5Den = 170085u;

// Running minimum of phi(n)/n over the corpus, per power of ten.
inline constexpr std::array<std::uint64_t, 5> kMinPhiWitness{{561u, 561u, 62745u, 62745u, 62745u}};

// k <= 10^4 with 6k+1, 12k+1, 18k+1 all prime.
inline constexpr std::size_t kChernickCount = 159u;
inline constexpr std::uint64_t kChernickKSum = 683629u;

// Least Carmichael number <= 10^7 in r mod m for m = 3..8 (0 when none), packed as r, m, n.
inline constexpr std::array<std::uint64_t, 99> kClassWitness{{
    0u, 3u, 561u, 1u, 3u, 1105u, 2u, 3u, 2465u, 0u, 4u, 0u, 1u, 4u, 561u, 2u, 4u, 0u, 3u, 4u, 8911u, 0u, 5u, 1105u, 1u, 5u, 561u, 2u, 5u, 46657u, 3u, 5u, 52633u, 4u, 5u, 1729u, 0u, 6u, 0u, 1u, 6u, 1105u, 2u, 6u, 0u, 3u, 6u, 561u, 4u, 6u, 0u, 5u, 6u, 2465u, 0u, 7u, 1729u, 1u, 7u, 561u, 2u, 7u, 46657u, 3u, 7u, 294409u, 4u, 7u, 29341u, 5u, 7u, 512461u, 6u, 7u, 1105u, 0u, 8u, 0u, 1u, 8u, 561u, 2u, 8u, 0u, 3u, 8u, 1024651u, 4u, 8u, 0u, 5u, 8u, 2821u, 6u, 8u, 0u, 7u, 8u, 8911u}};

}  // namespace oracle
