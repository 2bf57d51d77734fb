#include "font_data.hpp"

namespace glasswing::fontdata {

// 8x16 cells. Caps and digits sit on rows 2..11 (baseline row 11),
// lowercase x-height starts at row 5, descenders reach row 14.
// Column 7 is left clear for inter-glyph spacing.
const GlyphArt kGlyphArt[] = {
    {' ',
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'!',
     "........"
     "........"
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "........"
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "........"},
    {'"',
     "........"
     "........"
     ".XX.XX.."
     ".XX.XX.."
     ".XX.XX.."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'#',
     "........"
     "........"
     "........"
     "..XX.XX."
     "..XX.XX."
     ".XXXXXX."
     "..XX.XX."
     "..XX.XX."
     ".XXXXXX."
     "..XX.XX."
     "..XX.XX."
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'$',
     "........"
     "........"
     "...XX..."
     "..XXXXX."
     ".XX....."
     ".XX....."
     "..XXXX.."
     ".....XX."
     ".....XX."
     ".XXXXX.."
     "...XX..."
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'%',
     "........"
     "........"
     "........"
     ".XX...X."
     ".XX..XX."
     "....XX.."
     "...XX..."
     "..XX...."
     ".XX....."
     ".XX..XX."
     ".X...XX."
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'&',
     "........"
     "........"
     "..XXX..."
     ".XX.XX.."
     ".XX.XX.."
     "..XXX..."
     ".XXX...."
     "XX.XX.X."
     "XX..XX.."
     "XX..XX.."
     ".XXX.XX."
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'\'',
     "........"
     "........"
     "...XX..."
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'(',
     "........"
     "........"
     "....XX.."
     "...XX..."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "...XX..."
     "....XX.."
     "........"
     "........"
     "........"},
    {')',
     "........"
     "........"
     "..XX...."
     "...XX..."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "...XX..."
     "..XX...."
     "........"
     "........"
     "........"},
    {'*',
     "........"
     "........"
     "........"
     "...XX..."
     ".X.XX.X."
     "..XXXX.."
     ".X.XX.X."
     "...XX..."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'+',
     "........"
     "........"
     "........"
     "........"
     "........"
     "...XX..."
     "...XX..."
     ".XXXXXX."
     ".XXXXXX."
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "........"
     "........"},
    {',',
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "...XX..."
     "...XX..."
     "..XX...."
     "........"
     "........"
     "........"},
    {'-',
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XXXXXX."
     ".XXXXXX."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'.',
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "........"},
    {'/',
     "........"
     "........"
     ".....XX."
     ".....XX."
     "....XX.."
     "....XX.."
     "...XX..."
     "...XX..."
     "..XX...."
     "..XX...."
     ".XX....."
     ".XX....."
     "........"
     "........"
     "........"
     "........"},
    {'0',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX.XXX."
     ".XXX.XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'1',
     "........"
     "........"
     "...XX..."
     "..XXX..."
     ".XXXX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     ".XXXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'2',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".....XX."
     "....XX.."
     "...XX..."
     "..XX...."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XXXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'3',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".....XX."
     ".....XX."
     "...XXX.."
     ".....XX."
     ".....XX."
     ".....XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'4',
     "........"
     "........"
     "....XXX."
     "...XXXX."
     "..XX.XX."
     ".XX..XX."
     ".XX..XX."
     ".XXXXXX."
     ".....XX."
     ".....XX."
     ".....XX."
     ".....XX."
     "........"
     "........"
     "........"
     "........"},
    {'5',
     "........"
     "........"
     ".XXXXXX."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XXXXX.."
     ".....XX."
     ".....XX."
     ".....XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'6',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX....."
     ".XX....."
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'7',
     "........"
     "........"
     ".XXXXXX."
     ".....XX."
     ".....XX."
     "....XX.."
     "....XX.."
     "...XX..."
     "...XX..."
     "..XX...."
     "..XX...."
     "..XX...."
     "........"
     "........"
     "........"
     "........"},
    {'8',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'9',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXXX."
     ".....XX."
     ".....XX."
     ".....XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {':',
     "........"
     "........"
     "........"
     "........"
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "........"
     "........"},
    {';',
     "........"
     "........"
     "........"
     "........"
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "...XX..."
     "...XX..."
     "..XX...."
     "........"
     "........"
     "........"
     "........"},
    {'<',
     "........"
     "........"
     "........"
     "....XXX."
     "...XX..."
     "..XX...."
     ".XX....."
     "..XX...."
     "...XX..."
     "....XXX."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'=',
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XXXXXX."
     ".XXXXXX."
     "........"
     ".XXXXXX."
     ".XXXXXX."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'>',
     "........"
     "........"
     "........"
     ".XXX...."
     "...XX..."
     "....XX.."
     ".....XX."
     "....XX.."
     "...XX..."
     ".XXX...."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'?',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".....XX."
     "....XX.."
     "...XX..."
     "...XX..."
     "...XX..."
     "........"
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "........"},
    {'@',
     "........"
     "........"
     "..XXXX.."
     ".X....X."
     "X..XX.X."
     "X.X.X.X."
     "X.X.X.X."
     "X..XXXX."
     "X......."
     ".X....X."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'A',
     "........"
     "........"
     "...XX..."
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XXXXXX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'B',
     "........"
     "........"
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XXXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'C',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'D',
     "........"
     "........"
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XXXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'E',
     "........"
     "........"
     ".XXXXXX."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XXXXX.."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XXXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'F',
     "........"
     "........"
     ".XXXXXX."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XXXXX.."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     "........"
     "........"
     "........"
     "........"},
    {'G',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX.XXX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'H',
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XXXXXX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'I',
     "........"
     "........"
     ".XXXXXX."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     ".XXXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'J',
     "........"
     "........"
     "..XXXXX."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     ".XX.XX.."
     ".XX.XX.."
     "..XXX..."
     "........"
     "........"
     "........"
     "........"},
    {'K',
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     ".XX.XX.."
     ".XXXX..."
     ".XXX...."
     ".XXXX..."
     ".XX.XX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'L',
     "........"
     "........"
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XXXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'M',
     "........"
     "........"
     "XX...XX."
     "XXX.XXX."
     "XXXXXXX."
     "XX.X.XX."
     "XX.X.XX."
     "XX...XX."
     "XX...XX."
     "XX...XX."
     "XX...XX."
     "XX...XX."
     "........"
     "........"
     "........"
     "........"},
    {'N',
     "........"
     "........"
     ".XX..XX."
     ".XXX.XX."
     ".XXX.XX."
     ".XXXXXX."
     ".XX.XXX."
     ".XX.XXX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'O',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'P',
     "........"
     "........"
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XXXXX.."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     "........"
     "........"
     "........"
     "........"},
    {'Q',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX.XXX."
     ".XX..XX."
     "..XXXX.."
     ".....XX."
     "........"
     "........"
     "........"},
    {'R',
     "........"
     "........"
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XXXXX.."
     ".XXXX..."
     ".XX.XX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'S',
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX....."
     ".XX....."
     "..XXXX.."
     ".....XX."
     ".....XX."
     ".....XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'T',
     "........"
     "........"
     ".XXXXXX."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "........"},
    {'U',
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'V',
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "..XXXX.."
     "...XX..."
     "........"
     "........"
     "........"
     "........"},
    {'W',
     "........"
     "........"
     "XX...XX."
     "XX...XX."
     "XX...XX."
     "XX...XX."
     "XX...XX."
     "XX.X.XX."
     "XX.X.XX."
     "XXXXXXX."
     "XXX.XXX."
     "XX...XX."
     "........"
     "........"
     "........"
     "........"},
    {'X',
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "...XX..."
     "...XX..."
     "...XX..."
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'Y',
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"
     "........"},
    {'Z',
     "........"
     "........"
     ".XXXXXX."
     ".....XX."
     "....XX.."
     "....XX.."
     "...XX..."
     "..XX...."
     "..XX...."
     ".XX....."
     ".XX....."
     ".XXXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'[',
     "........"
     "........"
     "..XXXX.."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XXXX.."
     "........"
     "........"
     "........"},
    {'\\',
     "........"
     "........"
     ".XX....."
     ".XX....."
     "..XX...."
     "..XX...."
     "...XX..."
     "...XX..."
     "....XX.."
     "....XX.."
     ".....XX."
     ".....XX."
     "........"
     "........"
     "........"
     "........"},
    {']',
     "........"
     "........"
     "..XXXX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "..XXXX.."
     "........"
     "........"
     "........"},
    {'^',
     "........"
     "........"
     "...XX..."
     "..XXXX.."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'_',
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "XXXXXXX."
     "XXXXXXX."
     "........"},
    {'`',
     "........"
     "........"
     "..XX...."
     "...XX..."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
    {'a',
     "........"
     "........"
     "........"
     "........"
     "........"
     "..XXXX.."
     ".....XX."
     "..XXXXX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'b',
     "........"
     "........"
     ".XX....."
     ".XX....."
     ".XX....."
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XXXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'c',
     "........"
     "........"
     "........"
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'d',
     "........"
     "........"
     ".....XX."
     ".....XX."
     ".....XX."
     "..XXXXX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'e',
     "........"
     "........"
     "........"
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XXXXXX."
     ".XX....."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'f',
     "........"
     "........"
     "...XXX.."
     "..XX.XX."
     "..XX...."
     "..XX...."
     ".XXXXX.."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "........"
     "........"
     "........"
     "........"},
    {'g',
     "........"
     "........"
     "........"
     "........"
     "........"
     "..XXXXX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXXX."
     ".....XX."
     ".XX..XX."
     "..XXXX.."
     "........"},
    {'h',
     "........"
     "........"
     ".XX....."
     ".XX....."
     ".XX....."
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'i',
     "........"
     "........"
     "........"
     "...XX..."
     "........"
     "..XXX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'j',
     "........"
     "........"
     "........"
     "....XX.."
     "........"
     "...XXX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     "....XX.."
     ".XX.XX.."
     "..XXX..."
     "........"},
    {'k',
     "........"
     "........"
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX..XX."
     ".XX.XX.."
     ".XXXX..."
     ".XXXX..."
     ".XX.XX.."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'l',
     "........"
     "........"
     "..XXX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'m',
     "........"
     "........"
     "........"
     "........"
     "........"
     "XXXXXXX."
     "X..X..X."
     "X..X..X."
     "X..X..X."
     "X..X..X."
     "X..X..X."
     "X..X..X."
     "........"
     "........"
     "........"
     "........"},
    {'n',
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'o',
     "........"
     "........"
     "........"
     "........"
     "........"
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'p',
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XXXXX.."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XXXXX.."
     ".XX....."
     ".XX....."
     ".XX....."
     "........"},
    {'q',
     "........"
     "........"
     "........"
     "........"
     "........"
     "..XXXXX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXXX."
     ".....XX."
     ".....XX."
     ".....XX."
     "........"},
    {'r',
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XX.XXX."
     ".XXX.XX."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     ".XX....."
     "........"
     "........"
     "........"
     "........"},
    {'s',
     "........"
     "........"
     "........"
     "........"
     "........"
     "..XXXXX."
     ".XX....."
     ".XX....."
     "..XXXX.."
     ".....XX."
     ".....XX."
     ".XXXXX.."
     "........"
     "........"
     "........"
     "........"},
    {'t',
     "........"
     "........"
     "........"
     "..XX...."
     "..XX...."
     ".XXXXX.."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "..XX...."
     "...XXX.."
     "........"
     "........"
     "........"
     "........"},
    {'u',
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'v',
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "...XX..."
     "........"
     "........"
     "........"
     "........"},
    {'w',
     "........"
     "........"
     "........"
     "........"
     "........"
     "X..X..X."
     "X..X..X."
     "X..X..X."
     "X..X..X."
     "X..X..X."
     "X..X..X."
     ".XX.XX.."
     "........"
     "........"
     "........"
     "........"},
    {'x',
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     "..XXXX.."
     "...XX..."
     "..XXXX.."
     ".XX..XX."
     ".XX..XX."
     "........"
     "........"
     "........"
     "........"},
    {'y',
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     ".XX..XX."
     "..XXXXX."
     ".....XX."
     ".XX..XX."
     "..XXXX.."
     "........"},
    {'z',
     "........"
     "........"
     "........"
     "........"
     "........"
     ".XXXXXX."
     ".....XX."
     "....XX.."
     "...XX..."
     "..XX...."
     ".XX....."
     ".XXXXXX."
     "........"
     "........"
     "........"
     "........"},
    {'{',
     "........"
     "........"
     "....XXX."
     "...XX..."
     "...XX..."
     "...XX..."
     "..XX...."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "....XXX."
     "........"
     "........"
     "........"
     "........"},
    {'|',
     "........"
     "........"
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     "........"
     "........"
     "........"},
    {'}',
     "........"
     "........"
     ".XXX...."
     "...XX..."
     "...XX..."
     "...XX..."
     "....XX.."
     "...XX..."
     "...XX..."
     "...XX..."
     "...XX..."
     ".XXX...."
     "........"
     "........"
     "........"
     "........"},
    {'~',
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "..XXX.X."
     ".X.XXX.."
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"
     "........"},
};

const std::size_t kGlyphArtCount = sizeof(kGlyphArt) / sizeof(kGlyphArt[0]);

} // namespace glasswing::fontdata
