public class FullyCohesive {
    private int total;
    private int count;
    private int last;

    public void update(int amount) {
        total = total + amount;
        count = count + 1;
        last = amount;
    }

    public void resetCount() {
        count = 0;
    }

    public int peekLast() {
        return last;
    }
}
