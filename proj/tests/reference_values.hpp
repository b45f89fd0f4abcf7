#pragma once

// Decimal constants produced outside this code base (mpmath, 70 working
// digits, printed to 60 significant digits).

namespace ref {

inline constexpr const char* kZeta[] = {
    nullptr,
    nullptr,
    "1.64493406684822643647241516664602518921894990120679843773556",
    "1.20205690315959428539973816151144999076498629234049888179227",
    "1.08232323371113819151600369654116790277475095191872690768298",
    "1.03692775514336992633136548645703416805708091950191281197419",
    "1.01734306198444913971451792979092052790181749003285356184241",
    "1.00834927738192282683979754984979675959986356056523870641728",
    "1.00407735619794433937868523850865246525896079064985002032911",
    "1.0020083928260822144178527692324120604856058513948887565486",
    "1.00099457512781808533714595890031901700601953156447751725779",
    "1.00049418860411946455870228252646993646860643575820861711914",
    "1.00024608655330804829863799804773967096041608845800340453304",
    "1.0001227133475784891467518365263573957142751058955098451367",
};

// zeta(3,1) = pi^4/360
inline constexpr const char* kZeta31 = "0.270580808427784547879000924135291975693687737979681726920744";
// zeta(4,1) = 2 zeta(5) - zeta(2) zeta(3)
inline constexpr const char* kZeta41 = "0.0965511599894437344656455314289427640320103723436914152525631";
// zeta(5,1) = 3/4 zeta(6) - 1/2 zeta(3)^2
inline constexpr const char* kZeta51 = "0.0405368972715197378290459079396964823344954146426958343160894";
inline constexpr const char* kTwoZeta3 = "2.40411380631918857079947632302289998152997258468099776358454";
// zeta(2) + 2 zeta(3) - 1
inline constexpr const char* kU112 = "3.0490478731674150072718914896689251707489224858877962013201";
// zeta(3,1) + zeta(4) = pi^4/72
inline constexpr const char* kS113 = "1.35290404213892273939500462067645987846843868989840863460372";

}  // namespace ref
