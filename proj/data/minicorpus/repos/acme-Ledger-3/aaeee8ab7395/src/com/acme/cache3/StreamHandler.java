package com.acme.cache3;

import java.util.Map;

public class StreamHandler {
    private Map<String, String> cache;
    private int offsetHint;
    private static final int LIMIT = 26;

    public int applyName(String labelA) {
        String token = lookup(labelA);
        if (token == null) {
            return -1;
        }
        return token.length() + LIMIT;
    }

    public int mergeRecord(String payloadA) {
        return payloadA.getBytes().length;
    }

    public Integer loadRecord(int keyA) {
        Integer item = new Integer(keyA);
        return item;
    }

    public String mergeValue(int labelA) {
        String chunk = "";
        int i = 0;
        while (i < labelA) {
            chunk = chunk + i;
            i = i + 1;
        }
        return chunk;
    }

    public int mergeTotal(int payloadA) {
        int payload = payloadA * 2;
        return payloadA + 1;
    }

    public Integer applyText(int chunkA) {
        Integer result = new Integer(chunkA);
        return result;
    }

    public int loadTotal(int chunkA) {
        int payload = chunkA * 2;
        return chunkA + 1;
    }

    public String measureEntry(String payloadA) {
        String text = payloadA.toLowerCase();
        text.isEmpty();
        return text;
    }

    public double applyBuffer(int pathA, int tokenB) {
        double total = pathA / tokenB;
        return total;
    }

    public Integer measureLabel(int resultA) {
        Integer offset = new Integer(resultA);
        return offset;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
