; two-rate counter: j advances by 4 until t flips the branch, then by 2 with k counting
(declare-var j Int)
(declare-var k Int)
(declare-var t Int)
(init (and (= j 2) (= k 0)))
(trans (or (and (= t 0) (= j' (+ j 4)) (= k' k) (= t' t))
           (and (not (= t 0)) (= j' (+ j 2)) (= k' (+ k 1)) (= t' t))))
(good (or (= k 0) (= j (+ (* 2 k) 2))))
